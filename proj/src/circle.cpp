#include "medianlab/circle.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "json.hpp"

#include "medianlab/error.hpp"

namespace medianlab {

namespace {

constexpr std::size_t kHashSeed = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kHashSeed + (h << 6) + (h >> 2);
  return h;
}

// Slope of the segment (dim / dbp) as an exponent of two. Both deltas are
// positive; normalized numerators must agree or the slope is not a power of
// two.
int slope_exponent(const Dyadic& dim, const Dyadic& dbp) {
  if (dim.num() != dbp.num())
    throw Error(ErrorKind::InvalidParam, "segment slope is not a power of two");
  return dbp.exp() - dim.exp();
}

nlohmann::ordered_json dyadic_to_json(const Dyadic& d) {
  nlohmann::ordered_json entry = nlohmann::ordered_json::array();
  const BigInt& n = d.num();
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    entry.push_back(static_cast<long long>(n));
  else
    entry.push_back(n.str());
  entry.push_back(d.exp());
  return entry;
}

Dyadic dyadic_from_json(const nlohmann::json& entry) {
  if (!entry.is_array() || entry.size() != 2)
    throw Error(ErrorKind::ParseError, "dyadic entry must be [num, exp]");
  BigInt num;
  if (entry[0].is_number_integer())
    num = entry[0].get<long long>();
  else if (entry[0].is_string())
    num = BigInt(entry[0].get<std::string>());
  else
    throw Error(ErrorKind::ParseError, "dyadic numerator must be an integer or string");
  if (!entry[1].is_number_integer())
    throw Error(ErrorKind::ParseError, "dyadic exponent must be an integer");
  int exp = entry[1].get<int>();
  if (exp < 0) throw Error(ErrorKind::NonDyadicInput, "negative exponent in dyadic entry");
  return Dyadic(num, exp);
}

}  // namespace

CircleMap::CircleMap(std::vector<Dyadic> bp, std::vector<Dyadic> im)
    : bp_(std::move(bp)), im_(std::move(im)) {
  if (bp_.size() != im_.size() || bp_.size() < 2)
    throw Error(ErrorKind::InvalidParam, "breakpoint and image lists must match, length >= 2");
  if (!(bp_.front() == Dyadic(0)) || !(bp_.back() == Dyadic(1)))
    throw Error(ErrorKind::InvalidParam, "breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < bp_.size(); ++i) {
    if (!(bp_[i] < bp_[i + 1]))
      throw Error(ErrorKind::InvalidParam, "breakpoints must be strictly increasing");
    if (!(im_[i] < im_[i + 1]))
      throw Error(ErrorKind::InvalidParam, "images must be strictly increasing");
  }
  if (im_.front() < Dyadic(0) || !(im_.front() < Dyadic(1)))
    throw Error(ErrorKind::InvalidParam, "lift must be normalized with F(0) in [0,1)");
  if (!(im_.back() == im_.front() + Dyadic(1)))
    throw Error(ErrorKind::InvalidParam, "lift must satisfy F(1) = F(0) + 1");

  // validate slopes and merge collinear nodes
  std::vector<int> slopes;
  for (std::size_t i = 0; i + 1 < bp_.size(); ++i)
    slopes.push_back(slope_exponent(im_[i + 1] - im_[i], bp_[i + 1] - bp_[i]));
  std::vector<Dyadic> nbp{bp_.front()}, nim{im_.front()};
  for (std::size_t i = 1; i + 1 < bp_.size(); ++i)
    if (slopes[i] != slopes[i - 1]) {
      nbp.push_back(bp_[i]);
      nim.push_back(im_[i]);
    }
  nbp.push_back(bp_.back());
  nim.push_back(im_.back());
  bp_ = std::move(nbp);
  im_ = std::move(nim);
}

CircleMap CircleMap::identity() { return CircleMap({Dyadic(0), Dyadic(1)}, {Dyadic(0), Dyadic(1)}); }

CircleMap CircleMap::rotation(const Dyadic& r) {
  Dyadic rf = r.frac();
  if (rf.is_zero()) return identity();
  return CircleMap({Dyadic(0), Dyadic(1)}, {rf, rf + Dyadic(1)});
}

bool CircleMap::is_identity() const { return *this == identity(); }

Dyadic CircleMap::eval_lift(const Dyadic& x) const {
  BigInt n = x.floor();
  Dyadic xf = x - Dyadic(n, 0);  // in [0,1)
  std::size_t i = 0;
  while (i + 2 < bp_.size() && !(xf < bp_[i + 1])) ++i;
  int m = slope_exponent(im_[i + 1] - im_[i], bp_[i + 1] - bp_[i]);
  Dyadic val = im_[i] + (xf - bp_[i]).mul_pow2(m);
  return val + Dyadic(n, 0);
}

Dyadic CircleMap::inv_eval_lift(const Dyadic& y) const {
  BigInt n = (y - im_.front()).floor();
  Dyadic yf = y - Dyadic(n, 0);  // in [F(0), F(0)+1)
  std::size_t i = im_.size() - 2;
  while (yf < im_[i]) --i;
  int m = slope_exponent(im_[i + 1] - im_[i], bp_[i + 1] - bp_[i]);
  Dyadic x = bp_[i] + (yf - im_[i]).mul_pow2(-m);
  return x + Dyadic(n, 0);
}

CircleMap CircleMap::compose(const CircleMap& f, const CircleMap& g) {
  std::vector<Dyadic> xs(g.bp_);
  const Dyadic g0 = g.im_.front();
  for (const Dyadic& b : f.bp_) {
    BigInt n0 = (g0 - b).floor();
    for (int d = 0; d <= 2; ++d) {
      Dyadic y = b + Dyadic(n0 + d, 0);
      if (y < g0 || g0 + Dyadic(1) < y) continue;
      Dyadic x = g.inv_eval_lift(y);
      if (x < Dyadic(0) || Dyadic(1) < x) continue;
      xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Dyadic> im;
  im.reserve(xs.size());
  for (const Dyadic& x : xs) im.push_back(f.eval_lift(g.eval_lift(x)));
  BigInt k = im.front().floor();
  if (k != 0)
    for (Dyadic& v : im) v = v - Dyadic(k, 0);
  return CircleMap(std::move(xs), std::move(im));
}

CircleMap CircleMap::inverse() const {
  std::vector<Dyadic> ys{Dyadic(0), Dyadic(1)};
  for (const Dyadic& v : im_)
    for (int d = -2; d <= 1; ++d) {
      Dyadic y = v + Dyadic(d);
      if (y < Dyadic(0) || Dyadic(1) < y) continue;
      ys.push_back(y);
    }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Dyadic> gx;
  gx.reserve(ys.size());
  for (const Dyadic& y : ys) gx.push_back(inv_eval_lift(y));
  BigInt k = gx.front().floor();
  if (k != 0)
    for (Dyadic& v : gx) v = v - Dyadic(k, 0);
  return CircleMap(std::move(ys), std::move(gx));
}

bool CircleMap::operator==(const CircleMap& other) const {
  return bp_ == other.bp_ && im_ == other.im_;
}

std::size_t CircleMap::hash() const {
  std::size_t h = 0x44dd;
  for (const Dyadic& d : bp_) h = mix(h, d.hash());
  for (const Dyadic& d : im_) h = mix(h, d.hash());
  return h;
}

std::string CircleMap::to_json() const {
  nlohmann::ordered_json j;
  auto& jb = j["bp"] = nlohmann::ordered_json::array();
  for (const Dyadic& d : bp_) jb.push_back(dyadic_to_json(d));
  auto& ji = j["im"] = nlohmann::ordered_json::array();
  for (const Dyadic& d : im_) ji.push_back(dyadic_to_json(d));
  return j.dump();
}

CircleMap CircleMap::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorKind::ParseError, "invalid JSON for circle map");
  }
  if (!j.is_object() || !j.contains("bp") || !j.contains("im"))
    throw Error(ErrorKind::ParseError, "circle map JSON needs 'bp' and 'im' lists");
  std::vector<Dyadic> bp, im;
  for (const auto& e : j.at("bp")) bp.push_back(dyadic_from_json(e));
  for (const auto& e : j.at("im")) im.push_back(dyadic_from_json(e));
  return CircleMap(std::move(bp), std::move(im));
}

namespace {

std::vector<Dyadic> random_partition(std::mt19937_64& rng, int splits) {
  std::vector<Dyadic> cuts{Dyadic(0), Dyadic(1)};
  for (int s = 0; s < splits; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 2);
    std::size_t i = pick(rng);
    Dyadic mid = (cuts[i] + cuts[i + 1]).mul_pow2(-1);
    cuts.insert(cuts.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
  }
  return cuts;
}

}  // namespace

CircleMap CircleMap::random(std::mt19937_64& rng, int splits) {
  if (splits < 0) splits = 0;
  auto p = random_partition(rng, splits);
  auto q = random_partition(rng, splits);
  const std::size_t k = p.size() - 1;  // interval count
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  const std::size_t shift = pick(rng);
  std::vector<Dyadic> im;
  im.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t j = i + shift;
    if (j <= k)
      im.push_back(q[j]);
    else
      im.push_back(q[j - k] + Dyadic(1));
  }
  return CircleMap(std::move(p), std::move(im));
}

int euler_value(const CircleMap& g, const CircleMap& h) {
  Dyadic v = g.eval_lift(h.eval_lift(Dyadic(0)));
  return static_cast<int>(v.floor());
}

LineMap LineMap::identity() { return LineMap(CircleMap::identity(), 0); }

LineMap LineMap::translation(long long n) { return LineMap(CircleMap::identity(), n); }

Dyadic LineMap::eval(const Dyadic& x) const { return base_.eval_lift(x) + Dyadic(offset_); }

LineMap LineMap::compose(const LineMap& f, const LineMap& g) {
  CircleMap h = CircleMap::compose(f.base_, g.base_);
  Dyadic raw = f.base_.eval_lift(g.base_.eval_lift(Dyadic(0)));
  Dyadic diff = raw - h.eval_lift(Dyadic(0));
  if (!diff.is_integer())
    throw Error(ErrorKind::Internal, "lift correction is not an integer");
  long long c = static_cast<long long>(diff.floor());
  return LineMap(std::move(h), f.offset_ + g.offset_ + c);
}

LineMap LineMap::inverse() const {
  CircleMap binv = base_.inverse();
  Dyadic raw = binv.eval_lift(base_.eval_lift(Dyadic(0)));
  if (!raw.is_integer()) throw Error(ErrorKind::Internal, "inverse correction is not an integer");
  long long c = static_cast<long long>(raw.floor());
  return LineMap(std::move(binv), -offset_ - c);
}

bool LineMap::operator==(const LineMap& other) const {
  return offset_ == other.offset_ && base_ == other.base_;
}

std::size_t LineMap::hash() const {
  return mix(base_.hash(), static_cast<std::size_t>(offset_));
}

std::string LineMap::to_json() const {
  nlohmann::ordered_json j;
  j["base"] = nlohmann::ordered_json::parse(base_.to_json());
  j["offset"] = offset_;
  return j.dump();
}

LineMap LineMap::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorKind::ParseError, "invalid JSON for line map");
  }
  if (!j.is_object() || !j.contains("base"))
    throw Error(ErrorKind::ParseError, "line map JSON needs 'base'");
  CircleMap base = CircleMap::from_json(j.at("base").dump());
  long long offset = j.value("offset", 0ll);
  return LineMap(std::move(base), offset);
}

LineMap lift(const CircleMap& f) { return LineMap(f, 0); }

bool CircleElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const CircleElement*>(&other);
  return o != nullptr && map_ == o->map_;
}

Element TGroup::identity() const { return make_element<CircleElement>(CircleMap::identity()); }

Element TGroup::mul(const Element& a, const Element& b) const {
  return make_element<CircleElement>(
      CircleMap::compose(a.as<CircleElement>().map(), b.as<CircleElement>().map()));
}

Element TGroup::inv(const Element& a) const {
  return make_element<CircleElement>(a.as<CircleElement>().map().inverse());
}

namespace {

std::string trim_copy(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b);
}

Dyadic parse_rotation_amount(const std::string& body) {
  std::size_t slash = body.find('/');
  try {
    if (slash == std::string::npos) return Dyadic(std::stoll(body));
    long long p = std::stoll(body.substr(0, slash));
    long long q = std::stoll(body.substr(slash + 1));
    if (q <= 0) throw Error(ErrorKind::ParseError, "rotation denominator must be positive");
    int e = 0;
    long long r = q;
    while (r % 2 == 0) {
      r /= 2;
      ++e;
    }
    if (r != 1)
      throw Error(ErrorKind::NonDyadicInput,
                  "rotation amount " + body + " is not a dyadic rational");
    return Dyadic(BigInt(p), e);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad rotation amount '" + body + "'");
  }
}

}  // namespace

Element TGroup::parse(const std::string& text) const {
  std::string t = trim_copy(text);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty circle map text");
  if (t == "id" || t == "e") return identity();
  if (t.rfind("rot:", 0) == 0)
    return make_element<CircleElement>(CircleMap::rotation(parse_rotation_amount(t.substr(4))));
  if (t.front() == '{') return make_element<CircleElement>(CircleMap::from_json(t));
  throw Error(ErrorKind::ParseError, "expected 'id', 'rot:p/q' or JSON circle map");
}

Element TGroup::random_element(std::mt19937_64& rng, int word_length) const {
  int splits = std::max(1, word_length / 2);
  return make_element<CircleElement>(CircleMap::random(rng, splits));
}

bool LineElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const LineElement*>(&other);
  return o != nullptr && map_ == o->map_;
}

Element TBarGroup::identity() const { return make_element<LineElement>(LineMap::identity()); }

Element TBarGroup::mul(const Element& a, const Element& b) const {
  return make_element<LineElement>(
      LineMap::compose(a.as<LineElement>().map(), b.as<LineElement>().map()));
}

Element TBarGroup::inv(const Element& a) const {
  return make_element<LineElement>(a.as<LineElement>().map().inverse());
}

std::vector<Generator> TBarGroup::generators() const {
  return {{"tau", make_element<LineElement>(LineMap::translation(1))}};
}

Element TBarGroup::parse(const std::string& text) const {
  std::string t = trim_copy(text);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty line map text");
  if (t == "id" || t == "e") return identity();
  if (t == "tau") return make_element<LineElement>(LineMap::translation(1));
  if (t.rfind("lift:", 0) == 0) {
    TGroup base;
    Element circle = base.parse(t.substr(5));
    return make_element<LineElement>(lift(circle.as<CircleElement>().map()));
  }
  if (t.front() == '{') return make_element<LineElement>(LineMap::from_json(t));
  throw Error(ErrorKind::ParseError, "expected 'id', 'tau', 'lift:<circle>' or JSON line map");
}

Element TBarGroup::random_element(std::mt19937_64& rng, int word_length) const {
  int splits = std::max(1, word_length / 2);
  std::uniform_int_distribution<long long> off(-2, 2);
  return make_element<LineElement>(LineMap(CircleMap::random(rng, splits), off(rng)));
}

}  // namespace medianlab
