#include "medianlab/group.hpp"

#include <algorithm>
#include <cctype>

#include "medianlab/error.hpp"

namespace medianlab {

void throw_model_mismatch(const char* expected) {
  throw Error(ErrorKind::ModelMismatch,
              std::string("element does not belong to this model (expected ") + expected + ")");
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string invert_name(std::string name) {
  // capitalized first letter = inverse; applied involutively
  if (std::isupper(static_cast<unsigned char>(name[0])))
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  else
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  return name;
}

}  // namespace

std::vector<std::pair<std::string, long long>> tokenize_word(const std::string& word) {
  std::vector<std::pair<std::string, long long>> out;
  std::size_t i = 0;
  const std::size_t n = word.size();
  while (i < n) {
    char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == static_cast<char>(0xC2)) {
      // skip separators; 0xC2 0xB7 is the UTF-8 middle dot used in element text
      ++i;
      continue;
    }
    if (static_cast<unsigned char>(c) == 0xB7) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ParseError,
                  "column " + std::to_string(i + 1) + ": unexpected character '" + c + "'");
    std::size_t start = i;
    ++i;
    while (i < n && is_name_char(word[i])) ++i;
    std::string name = word.substr(start, i - start);
    long long exponent = 1;
    if (i < n && word[i] == '^') {
      ++i;
      std::size_t exp_start = i;
      if (i < n && (word[i] == '-' || word[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (i == exp_start || (i == exp_start + 1 && !std::isdigit(static_cast<unsigned char>(word[exp_start]))))
        throw Error(ErrorKind::ParseError,
                    "column " + std::to_string(exp_start + 1) + ": expected integer exponent");
      exponent = std::stoll(word.substr(exp_start, i - exp_start));
    }
    out.push_back({std::move(name), exponent});
  }
  return out;
}

Element Group::power(const Element& e, long long n) const {
  if (n == 0) return identity();
  Element base = n < 0 ? inv(e) : e;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1
                               : static_cast<unsigned long long>(n);
  Element acc = identity();
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<Generator> Group::symmetric_generators() const {
  std::vector<Generator> out;
  for (const auto& g : generators()) {
    out.push_back(g);
    Element giv = inv(g.value);
    if (!(giv == g.value)) out.push_back({invert_name(g.name), giv});
  }
  return out;
}

Element Group::generator_by_name(const std::string& name) const {
  for (const auto& g : generators()) {
    if (g.name == name) return g.value;
    if (invert_name(g.name) == name) return inv(g.value);
  }
  throw Error(ErrorKind::UnknownGenerator, "no generator named '" + name + "' in " + this->name());
}

Element Group::evaluate_word(const std::string& word) const {
  auto gens = generators();
  bool all_single = std::all_of(gens.begin(), gens.end(),
                                [](const Generator& g) { return g.name.size() == 1; });

  auto tokens = tokenize_word(word);
  // compact form: one token, letters only, every letter a known generator name
  if (all_single && tokens.size() == 1 && tokens[0].second == 1 && tokens[0].first.size() > 1) {
    const std::string run = tokens[0].first;  // copy: tokens is cleared below
    bool compact = std::all_of(run.begin(), run.end(), [&](char c) {
      std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      return std::any_of(gens.begin(), gens.end(),
                         [&](const Generator& g) { return g.name == lower; });
    });
    if (compact) {
      tokens.clear();
      for (char c : run) tokens.push_back({std::string(1, c), 1});
    }
  }

  Element acc = identity();
  for (const auto& [name, exponent] : tokens) {
    if (name == "e" || name == "1") continue;
    acc = mul(acc, power(generator_by_name(name), exponent));
  }
  return acc;
}

Element Group::parse(const std::string& text) const { return evaluate_word(text); }

Element Group::random_element(std::mt19937_64& rng, int word_length) const {
  auto gens = symmetric_generators();
  if (gens.empty()) return identity();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Element acc = identity();
  for (int i = 0; i < word_length; ++i) acc = mul(acc, gens[pick(rng)].value);
  return acc;
}

bool ElementSet::insert(const Element& e) {
  auto& bucket = buckets_[e.hash()];
  for (const auto& x : bucket)
    if (x == e) return false;
  bucket.push_back(e);
  ++size_;
  return true;
}

bool ElementSet::contains(const Element& e) const {
  auto it = buckets_.find(e.hash());
  if (it == buckets_.end()) return false;
  for (const auto& x : it->second)
    if (x == e) return true;
  return false;
}

std::vector<Element> enumerate_ball(const Group& g, int radius, const Caps& caps) {
  if (!g.enumerable())
    throw Error(ErrorKind::NotEnumerable, g.name() + " does not support Cayley BFS");
  if (radius < 0) throw Error(ErrorKind::InvalidParam, "radius must be nonnegative");
  auto gens = g.symmetric_generators();
  std::vector<Element> out{g.identity()};
  ElementSet seen;
  seen.insert(out.front());
  std::size_t sphere_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t sphere_end = out.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i)
      for (const auto& s : gens) {
        Element w = g.mul(out[i], s.value);
        if (!seen.insert(w)) continue;
        if (seen.size() > caps.ball_cap)
          throw Error(ErrorKind::CapExceeded,
                      "ball exceeded " + std::to_string(caps.ball_cap) + " elements");
        out.push_back(std::move(w));
      }
    sphere_begin = sphere_end;
    if (sphere_begin == out.size()) break;  // finite group exhausted
  }
  return out;
}

std::optional<long long> order_of(const Group& g, const Element& e, long long bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidParam, "order bound must be >= 1");
  Element id = g.identity();
  Element acc = e;
  for (long long k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = g.mul(acc, e);
  }
  return std::nullopt;
}

long long word_length(const Group& g, const Element& e, const Caps& caps) {
  if (auto exact = g.length_oracle(e)) return *exact;
  if (!g.enumerable())
    throw Error(ErrorKind::NotEnumerable, g.name() + " does not support Cayley BFS");

  Element id = g.identity();
  if (e == id) return 0;
  auto gens = g.symmetric_generators();

  ElementSet seen;
  std::vector<Element> frontier{id};
  seen.insert(id);
  long long radius = 0;
  while (!frontier.empty()) {
    ++radius;
    std::vector<Element> next;
    for (const auto& v : frontier)
      for (const auto& s : gens) {
        Element w = g.mul(v, s.value);
        if (!seen.insert(w)) continue;
        if (w == e) return radius;
        if (seen.size() > caps.ball_cap)
          throw Error(ErrorKind::CapExceeded,
                      "Cayley BFS exceeded " + std::to_string(caps.ball_cap) + " states");
        next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  throw Error(ErrorKind::Internal, "exhausted a finite model without finding the element");
}

}  // namespace medianlab
