#include "medianlab/basic_groups.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "medianlab/error.hpp"

namespace medianlab {

namespace {

constexpr std::size_t kHashSeed = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kHashSeed + (h << 6) + (h >> 2);
  return h;
}

std::string letter_name(int rank_unused, int letter) {
  (void)rank_unused;
  char c = static_cast<char>('a' + std::abs(letter) - 1);
  if (letter < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return std::string(1, c);
}

}  // namespace

bool FreeWord::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const FreeWord*>(&other);
  return o != nullptr && letters_ == o->letters_;
}

std::size_t FreeWord::hash() const {
  std::size_t h = 0x1234;
  for (int l : letters_) h = mix(h, static_cast<std::size_t>(l + 64));
  return h;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (int l : letters_) out += letter_name(0, l);
  return out;
}

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > 26) throw Error(ErrorKind::InvalidParam, "free group rank out of range");
}

Element FreeGroup::identity() const { return make_element<FreeWord>(std::vector<int>{}); }

Element FreeGroup::mul(const Element& a, const Element& b) const {
  const auto& u = a.as<FreeWord>().letters();
  const auto& v = b.as<FreeWord>().letters();
  std::vector<int> out(u);
  for (int l : v) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return make_element<FreeWord>(std::move(out));
}

Element FreeGroup::inv(const Element& a) const {
  const auto& u = a.as<FreeWord>().letters();
  std::vector<int> out(u.rbegin(), u.rend());
  for (int& l : out) l = -l;
  return make_element<FreeWord>(std::move(out));
}

std::vector<Generator> FreeGroup::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i <= rank_; ++i)
    out.push_back({letter_name(rank_, i), make_element<FreeWord>(std::vector<int>{i})});
  return out;
}

std::optional<long long> FreeGroup::length_oracle(const Element& e) const {
  return static_cast<long long>(e.as<FreeWord>().letters().size());
}

bool ZkElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const ZkElement*>(&other);
  return o != nullptr && coords_ == o->coords_;
}

std::size_t ZkElement::hash() const {
  std::size_t h = 0x5678;
  for (long long c : coords_) h = mix(h, static_cast<std::size_t>(c));
  return h;
}

std::string ZkElement::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? "," : "") << coords_[i];
  out << ")";
  return out.str();
}

FreeAbelianGroup::FreeAbelianGroup(int rank) : rank_(rank) {
  if (rank < 1 || rank > 26)
    throw Error(ErrorKind::InvalidParam, "free abelian rank out of range");
}

Element FreeAbelianGroup::identity() const {
  return make_element<ZkElement>(std::vector<long long>(static_cast<std::size_t>(rank_), 0));
}

Element FreeAbelianGroup::mul(const Element& a, const Element& b) const {
  auto u = a.as<ZkElement>().coords();
  const auto& v = b.as<ZkElement>().coords();
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
  return make_element<ZkElement>(std::move(u));
}

Element FreeAbelianGroup::inv(const Element& a) const {
  auto u = a.as<ZkElement>().coords();
  for (auto& c : u) c = -c;
  return make_element<ZkElement>(std::move(u));
}

std::vector<Generator> FreeAbelianGroup::generators() const {
  std::vector<Generator> out;
  for (int i = 1; i <= rank_; ++i) {
    std::vector<long long> coords(static_cast<std::size_t>(rank_), 0);
    coords[static_cast<std::size_t>(i - 1)] = 1;
    out.push_back({letter_name(rank_, i), make_element<ZkElement>(std::move(coords))});
  }
  return out;
}

std::optional<long long> FreeAbelianGroup::length_oracle(const Element& e) const {
  long long total = 0;
  for (long long c : e.as<ZkElement>().coords()) total += std::llabs(c);
  return total;
}

std::vector<long long> parse_int_tuple(const std::string& text, std::size_t expected) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(')
    throw Error(ErrorKind::ParseError, "column " + std::to_string(i + 1) + ": expected '('");
  ++i;
  std::vector<long long> out;
  while (true) {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      throw Error(ErrorKind::ParseError, "column " + std::to_string(i + 1) + ": expected integer");
    out.push_back(std::stoll(text.substr(start, i - start)));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ')') {
      ++i;
      break;
    }
    throw Error(ErrorKind::ParseError, "column " + std::to_string(i + 1) + ": expected ',' or ')'");
  }
  skip_ws();
  if (i != text.size())
    throw Error(ErrorKind::ParseError, "column " + std::to_string(i + 1) + ": trailing input");
  if (out.size() != expected)
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(expected) + " coordinates, got " +
                    std::to_string(out.size()));
  return out;
}

Element FreeAbelianGroup::parse(const std::string& text) const {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(')
      return make_element<ZkElement>(parse_int_tuple(text, static_cast<std::size_t>(rank_)));
    break;
  }
  return evaluate_word(text);
}

bool HeisenbergElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const HeisenbergElement*>(&other);
  return o != nullptr && x_ == o->x_ && y_ == o->y_ && z_ == o->z_;
}

std::size_t HeisenbergElement::hash() const {
  std::size_t h = 0x9abc;
  h = mix(h, static_cast<std::size_t>(x_));
  h = mix(h, static_cast<std::size_t>(y_));
  h = mix(h, static_cast<std::size_t>(z_));
  return h;
}

std::string HeisenbergElement::str() const {
  std::ostringstream out;
  out << "(" << x_ << "," << y_ << "," << z_ << ")";
  return out.str();
}

Element HeisenbergGroup::identity() const { return make_element<HeisenbergElement>(0, 0, 0); }

Element HeisenbergGroup::mul(const Element& a, const Element& b) const {
  const auto& u = a.as<HeisenbergElement>();
  const auto& v = b.as<HeisenbergElement>();
  return make_element<HeisenbergElement>(u.x() + v.x(), u.y() + v.y(),
                                         u.z() + v.z() + u.x() * v.y());
}

Element HeisenbergGroup::inv(const Element& a) const {
  const auto& u = a.as<HeisenbergElement>();
  // (x,y,z)^-1 = (-x,-y,-z+xy)
  return make_element<HeisenbergElement>(-u.x(), -u.y(), -u.z() + u.x() * u.y());
}

std::vector<Generator> HeisenbergGroup::generators() const {
  return {{"a", make_element<HeisenbergElement>(1, 0, 0)},
          {"b", make_element<HeisenbergElement>(0, 1, 0)}};
}

Element HeisenbergGroup::parse(const std::string& text) const {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') {
      auto t = parse_int_tuple(text, 3);
      return make_element<HeisenbergElement>(t[0], t[1], t[2]);
    }
    break;
  }
  return evaluate_word(text);
}

}  // namespace medianlab
