#include "medianlab/lamplighter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "medianlab/error.hpp"

namespace medianlab {

namespace {

constexpr std::size_t kHashSeed = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kHashSeed + (h << 6) + (h >> 2);
  return h;
}

std::string format_lamps(const std::vector<int>& lamps) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < lamps.size(); ++i) out << (i ? "," : "") << lamps[i];
  out << "}";
  return out.str();
}

// Replaces UTF-8 middle dots with spaces so the element grammar is ASCII.
std::string ascii_clean(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      out += ' ';
      ++i;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

struct LampText {
  int eps = 0;
  bool saw_eps = false;
  std::vector<int> lamps;
  long long shift = 0;
};

// Grammar: [z^<bit>] ['{' ints '}'] [t^<int> | t]; parts separated by spaces.
LampText parse_lamp_text(const std::string& raw) {
  std::string text = ascii_clean(raw);
  LampText out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  auto read_int = [&](const char* what) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw Error(ErrorKind::ParseError,
                  "column " + std::to_string(start + 1) + ": expected " + std::string(what));
    return std::stoll(text.substr(start, i - start));
  };

  skip_ws();
  if (i < text.size() && text[i] == 'z') {
    ++i;
    out.saw_eps = true;
    if (i < text.size() && text[i] == '^') {
      ++i;
      long long e = read_int("exponent after z^");
      out.eps = static_cast<int>(((e % 2) + 2) % 2);
    } else {
      out.eps = 1;
    }
    skip_ws();
  }
  if (i < text.size() && text[i] == '{') {
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        out.lamps.push_back(static_cast<int>(read_int("lamp position")));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == '}') {
          ++i;
          break;
        }
        throw Error(ErrorKind::ParseError,
                    "column " + std::to_string(i + 1) + ": expected ',' or '}'");
      }
    }
    skip_ws();
  }
  if (i < text.size() && text[i] == 't') {
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      out.shift = read_int("exponent after t^");
    } else {
      out.shift = 1;
    }
    skip_ws();
  }
  if (i != text.size())
    throw Error(ErrorKind::ParseError,
                "column " + std::to_string(i + 1) + ": trailing input in element text");
  std::sort(out.lamps.begin(), out.lamps.end());
  out.lamps.erase(std::unique(out.lamps.begin(), out.lamps.end()), out.lamps.end());
  return out;
}

}  // namespace

TwistSet TwistSet::all() {
  TwistSet s;
  s.all_ = true;
  return s;
}

TwistSet TwistSet::finite(std::vector<int> members) {
  for (int m : members)
    if (m < 1) throw Error(ErrorKind::InvalidParam, "twist set members must be >= 1");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  TwistSet s;
  s.members_ = std::move(members);
  return s;
}

TwistSet TwistSet::parse(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "all") return all();
  if (trimmed.size() < 2 || trimmed.front() != '{' || trimmed.back() != '}')
    throw Error(ErrorKind::ParseError, "twist set must be 'all' or '{...}', got '" + text + "'");
  std::vector<int> members;
  std::string body = trimmed.substr(1, trimmed.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw Error(ErrorKind::ParseError, "empty entry in twist set");
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad twist set entry '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return finite(std::move(members));
}

int TwistSet::beta(int d) const {
  if (d < 1) throw Error(ErrorKind::InvalidParam, "beta is defined for d >= 1");
  if (all_) return 0;
  return std::binary_search(members_.begin(), members_.end(), d) ? 0 : 1;
}

bool TwistSet::operator==(const TwistSet& other) const {
  return all_ == other.all_ && members_ == other.members_;
}

std::string TwistSet::str() const {
  if (all_) return "all";
  return format_lamps(members_);
}

int crossing_parity(const TwistSet& family, const std::vector<int>& left,
                    const std::vector<int>& right_shifted) {
  int gamma = 0;
  for (int p : left)
    for (int q : right_shifted)
      if (p > q) gamma ^= family.beta(p - q);
  return gamma;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LamplighterElement::LamplighterElement(std::vector<int> lamps, long long shift)
    : lamps_(std::move(lamps)), shift_(shift) {
  if (std::adjacent_find(lamps_.begin(), lamps_.end(), std::greater_equal<int>()) != lamps_.end())
    throw Error(ErrorKind::InvalidParam, "lamp set must be strictly increasing");
}

bool LamplighterElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const LamplighterElement*>(&other);
  return o != nullptr && shift_ == o->shift_ && lamps_ == o->lamps_;
}

std::size_t LamplighterElement::hash() const {
  std::size_t h = 0x11aa;
  for (int p : lamps_) h = mix(h, static_cast<std::size_t>(p + 1024));
  h = mix(h, static_cast<std::size_t>(shift_));
  return h;
}

std::string LamplighterElement::str() const {
  if (lamps_.empty() && shift_ == 0) return "e";
  std::string out;
  if (!lamps_.empty()) out += format_lamps(lamps_);
  if (shift_ != 0) {
    if (!out.empty()) out += " ";
    out += "t^" + std::to_string(shift_);
  }
  return out;
}

Element LamplighterGroup::identity() const {
  return make_element<LamplighterElement>(std::vector<int>{}, 0);
}

Element LamplighterGroup::mul(const Element& a, const Element& b) const {
  const auto& u = a.as<LamplighterElement>();
  const auto& v = b.as<LamplighterElement>();
  std::vector<int> shifted(v.lamps());
  for (int& p : shifted) p += static_cast<int>(u.shift());
  return make_element<LamplighterElement>(symmetric_difference(u.lamps(), shifted),
                                          u.shift() + v.shift());
}

Element LamplighterGroup::inv(const Element& a) const {
  const auto& u = a.as<LamplighterElement>();
  std::vector<int> lamps(u.lamps());
  for (int& p : lamps) p -= static_cast<int>(u.shift());
  return make_element<LamplighterElement>(std::move(lamps), -u.shift());
}

std::vector<Generator> LamplighterGroup::generators() const {
  return {{"a", make_element<LamplighterElement>(std::vector<int>{0}, 0)},
          {"t", make_element<LamplighterElement>(std::vector<int>{}, 1)}};
}

Element LamplighterGroup::parse(const std::string& text) const {
  std::string cleaned = ascii_clean(text);
  bool structured = cleaned.find('{') != std::string::npos ||
                    cleaned.find('^') != std::string::npos;
  if (!structured) return evaluate_word(text);
  auto parts = parse_lamp_text(text);
  if (parts.saw_eps && parts.eps != 0)
    throw Error(ErrorKind::ParseError, "plain lamplighter elements have no z coordinate");
  return make_element<LamplighterElement>(std::move(parts.lamps), parts.shift);
}

TwistedElement::TwistedElement(int eps, std::vector<int> lamps, long long shift,
                               std::shared_ptr<const TwistSet> family)
    : eps_(eps & 1), lamps_(std::move(lamps)), shift_(shift), family_(std::move(family)) {
  if (std::adjacent_find(lamps_.begin(), lamps_.end(), std::greater_equal<int>()) != lamps_.end())
    throw Error(ErrorKind::InvalidParam, "lamp set must be strictly increasing");
}

bool TwistedElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const TwistedElement*>(&other);
  return o != nullptr && eps_ == o->eps_ && shift_ == o->shift_ && lamps_ == o->lamps_ &&
         *family_ == *o->family_;
}

std::size_t TwistedElement::hash() const {
  std::size_t h = 0x22bb;
  h = mix(h, static_cast<std::size_t>(eps_));
  for (int p : lamps_) h = mix(h, static_cast<std::size_t>(p + 1024));
  h = mix(h, static_cast<std::size_t>(shift_));
  return h;
}

std::string TwistedElement::str() const {
  std::string out = "z^" + std::to_string(eps_);
  out += " " + format_lamps(lamps_);
  out += " t^" + std::to_string(shift_);
  return out;
}

TwistedGroup::TwistedGroup(TwistSet family)
    : family_(std::make_shared<const TwistSet>(std::move(family))) {}

const TwistedElement& TwistedGroup::checked(const Element& e) const {
  const auto& t = e.as<TwistedElement>();
  if (!(t.family() == *family_))
    throw Error(ErrorKind::ModelMismatch,
                "element belongs to GI:I=" + t.family().str() + ", not " + name());
  return t;
}

Element TwistedGroup::identity() const {
  return make_element<TwistedElement>(0, std::vector<int>{}, 0, family_);
}

Element TwistedGroup::mul(const Element& a, const Element& b) const {
  const auto& u = checked(a);
  const auto& v = checked(b);
  std::vector<int> shifted(v.lamps());
  for (int& p : shifted) p += static_cast<int>(u.shift());
  int gamma = crossing_parity(*family_, u.lamps(), shifted);
  return make_element<TwistedElement>(u.eps() ^ v.eps() ^ gamma,
                                      symmetric_difference(u.lamps(), shifted),
                                      u.shift() + v.shift(), family_);
}

Element TwistedGroup::inv(const Element& a) const {
  const auto& u = checked(a);
  std::vector<int> lamps(u.lamps());
  for (int& p : lamps) p -= static_cast<int>(u.shift());
  // crossing of the element with its candidate inverse, evaluated directly
  int gamma = crossing_parity(*family_, u.lamps(), u.lamps());
  return make_element<TwistedElement>(u.eps() ^ gamma, std::move(lamps), -u.shift(), family_);
}

std::vector<Generator> TwistedGroup::generators() const {
  return {{"a", make_element<TwistedElement>(0, std::vector<int>{0}, 0, family_)},
          {"t", make_element<TwistedElement>(0, std::vector<int>{}, 1, family_)},
          {"z", make_element<TwistedElement>(1, std::vector<int>{}, 0, family_)}};
}

Element TwistedGroup::parse(const std::string& text) const {
  std::string cleaned = ascii_clean(text);
  bool structured = cleaned.find('{') != std::string::npos ||
                    cleaned.find('^') != std::string::npos;
  if (!structured) return evaluate_word(text);
  auto parts = parse_lamp_text(text);
  return make_element<TwistedElement>(parts.eps, std::move(parts.lamps), parts.shift, family_);
}

}  // namespace medianlab
