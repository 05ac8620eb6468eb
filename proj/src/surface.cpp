#include "medianlab/surface.hpp"

#include <algorithm>
#include <cctype>

#include "medianlab/error.hpp"

namespace medianlab {

namespace {

constexpr std::size_t kHashSeed = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kHashSeed + (h << 6) + (h >> 2);
  return h;
}

void free_reduce(std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int l : word) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  word = std::move(out);
}

std::vector<int> invert_word(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& l : out) l = -l;
  return out;
}

}  // namespace

std::string surface_letter_name(int letter) {
  int index = std::abs(letter);  // 1-based: odd = a_i, even = b_i
  int pair = (index + 1) / 2;
  char base = (index % 2 == 1) ? 'a' : 'b';
  if (letter < 0) base = static_cast<char>(std::toupper(static_cast<unsigned char>(base)));
  return std::string(1, base) + std::to_string(pair);
}

RelatorTable::RelatorTable(int genus) : genus_(genus) {
  if (genus < 2) throw Error(ErrorKind::InvalidParam, "surface genus must be >= 2");
  // R = prod_i a_i b_i a_i^-1 b_i^-1, letters a_i = 2i-1, b_i = 2i
  for (int i = 1; i <= genus; ++i) {
    int a = 2 * i - 1, b = 2 * i;
    relator_.insert(relator_.end(), {a, b, -a, -b});
  }
  const int len = relator_length();
  std::vector<std::vector<int>> rotations;
  for (const auto& base : {relator_, invert_word(relator_)})
    for (int s = 0; s < len; ++s) {
      std::vector<int> rot(base.begin() + s, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + s);
      rotations.push_back(std::move(rot));
    }
  for (const auto& rot : rotations)
    for (int plen = len / 2 + 1; plen <= len; ++plen) {
      std::vector<int> prefix(rot.begin(), rot.begin() + plen);
      std::vector<int> rest(rot.begin() + plen, rot.end());
      replacements_[std::move(prefix)] = invert_word(rest);
    }
}

std::vector<int> RelatorTable::reduce(std::vector<int> word) const {
  free_reduce(word);
  const int len = relator_length();
  bool changed = true;
  while (changed) {
    changed = false;
    const int n = static_cast<int>(word.size());
    for (int start = 0; start < n && !changed; ++start) {
      int max_len = std::min(len, n - start);
      for (int plen = max_len; plen > len / 2 && !changed; --plen) {
        std::vector<int> sub(word.begin() + start, word.begin() + start + plen);
        auto it = replacements_.find(sub);
        if (it == replacements_.end()) continue;
        std::vector<int> next(word.begin(), word.begin() + start);
        next.insert(next.end(), it->second.begin(), it->second.end());
        next.insert(next.end(), word.begin() + start + plen, word.end());
        free_reduce(next);
        word = std::move(next);
        changed = true;
      }
    }
  }
  return word;
}

SurfaceElement::SurfaceElement(std::vector<int> word, std::shared_ptr<const RelatorTable> table)
    : word_(std::move(word)), table_(std::move(table)) {}

bool SurfaceElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const SurfaceElement*>(&other);
  if (o == nullptr || table_->genus() != o->table_->genus()) return false;
  if (word_ == o->word_) return true;
  std::vector<int> quotient(word_);
  auto inv = invert_word(o->word_);
  quotient.insert(quotient.end(), inv.begin(), inv.end());
  return table_->reduce(std::move(quotient)).empty();
}

std::size_t SurfaceElement::hash() const {
  std::vector<long long> abelian(static_cast<std::size_t>(2 * table_->genus()), 0);
  for (int l : word_) abelian[static_cast<std::size_t>(std::abs(l) - 1)] += (l > 0 ? 1 : -1);
  std::size_t h = 0x33cc;
  for (long long v : abelian) h = mix(h, static_cast<std::size_t>(v));
  return h;
}

std::string SurfaceElement::str() const {
  if (word_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += " ";
    out += surface_letter_name(word_[i]);
  }
  return out;
}

SurfaceGroup::SurfaceGroup(int genus) : table_(std::make_shared<const RelatorTable>(genus)) {}

Element SurfaceGroup::from_word(std::vector<int> word) const {
  return make_element<SurfaceElement>(table_->reduce(std::move(word)), table_);
}

Element SurfaceGroup::identity() const { return from_word({}); }

Element SurfaceGroup::mul(const Element& a, const Element& b) const {
  const auto& u = a.as<SurfaceElement>();
  const auto& v = b.as<SurfaceElement>();
  if (u.table().genus() != v.table().genus())
    throw Error(ErrorKind::ModelMismatch, "surface elements of different genus");
  std::vector<int> word(u.word());
  word.insert(word.end(), v.word().begin(), v.word().end());
  return from_word(std::move(word));
}

Element SurfaceGroup::inv(const Element& a) const {
  return from_word(invert_word(a.as<SurfaceElement>().word()));
}

std::vector<Generator> SurfaceGroup::generators() const {
  std::vector<Generator> out;
  for (int l = 1; l <= 2 * genus(); ++l)
    out.push_back({surface_letter_name(l), from_word({l})});
  return out;
}

}  // namespace medianlab
