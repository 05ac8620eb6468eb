#include "medianlab/cocycle.hpp"

#include <algorithm>
#include <cctype>

#include "medianlab/basic_groups.hpp"
#include "medianlab/circle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/lamplighter.hpp"

namespace medianlab {

namespace {

constexpr std::size_t kHashSeed = 0x9e3779b97f4a7c15ull;

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + kHashSeed + (h << 6) + (h >> 2);
  return h;
}

long long mod2(long long v) { return ((v % 2) + 2) % 2; }

}  // namespace

Cocycle make_cocycle(const std::string& name) {
  Cocycle c;
  c.name = name;
  if (name == "trivial" || name.rfind("trivial:", 0) == 0) {
    std::string base_spec = name == "trivial" ? "zk:2" : name.substr(8);
    c.base = std::shared_ptr<const Group>(make_group(base_spec));
    c.value = [](const Element&, const Element&) -> long long { return 0; };
    c.claimed_bound = 0;
    return c;
  }
  if (name == "heisenberg") {
    c.base = std::make_shared<FreeAbelianGroup>(2);
    c.value = [](const Element& q1, const Element& q2) -> long long {
      return q1.as<ZkElement>().coords()[0] * q2.as<ZkElement>().coords()[1];
    };
    return c;  // unbounded: no claimed_bound
  }
  if (name == "corrupted") {
    // Heisenberg cocycle with a single perturbed value; fails the identity.
    c.base = std::make_shared<FreeAbelianGroup>(2);
    c.value = [](const Element& q1, const Element& q2) -> long long {
      const auto& u = q1.as<ZkElement>().coords();
      const auto& v = q2.as<ZkElement>().coords();
      long long base = u[0] * v[1];
      if (u[0] == 1 && u[1] == 0 && v[0] == 1 && v[1] == 0) base += 1;
      return base;
    };
    return c;
  }
  if (name == "euler:T") {
    c.base = std::make_shared<TGroup>();
    c.value = [](const Element& q1, const Element& q2) -> long long {
      return euler_value(q1.as<CircleElement>().map(), q2.as<CircleElement>().map());
    };
    c.claimed_bound = 1;
    return c;
  }
  if (name.rfind("twist:I=", 0) == 0) {
    TwistSet family = TwistSet::parse(name.substr(8));
    c.base = std::make_shared<LamplighterGroup>();
    c.characteristic = 2;
    c.value = [family](const Element& q1, const Element& q2) -> long long {
      const auto& u = q1.as<LamplighterElement>();
      const auto& v = q2.as<LamplighterElement>();
      std::vector<int> shifted(v.lamps());
      for (int& p : shifted) p += static_cast<int>(u.shift());
      return crossing_parity(family, u.lamps(), shifted);
    };
    c.claimed_bound = 1;
    return c;
  }
  throw Error(ErrorKind::InvalidParam, "unknown cocycle '" + name + "'");
}

CocycleCheckReport check_cocycle(const Cocycle& c, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::InvalidParam, "samples must be >= 1");
  CocycleCheckReport report;
  report.name = c.name;
  const Group& base = *c.base;

  long long max_abs = 0;
  auto identity_gap = [&](const Element& q1, const Element& q2, const Element& q3) {
    long long v23 = c.value(q2, q3);
    long long v12_3 = c.value(base.mul(q1, q2), q3);
    long long v1_23 = c.value(q1, base.mul(q2, q3));
    long long v12 = c.value(q1, q2);
    for (long long v : {v23, v12_3, v1_23, v12}) max_abs = std::max(max_abs, std::llabs(v));
    long long gap = v23 - v12_3 + v1_23 - v12;
    return c.characteristic == 2 ? mod2(gap) : gap;
  };
  auto record_violation = [&](const Element& q1, const Element& q2, const Element& q3,
                              long long gap) {
    if (!report.pass) return;
    report.pass = false;
    report.witness = {q1.str(), q2.str(), q3.str()};
    report.violation = gap;
  };

  // exhaustive phase on a small ball (enumerable bases)
  if (base.enumerable()) {
    Caps caps = default_caps();
    int radius = 2;
    std::vector<Element> ball = enumerate_ball(base, radius, caps);
    while (radius > 1 && ball.size() * ball.size() * ball.size() > 1'000'000) {
      --radius;
      ball = enumerate_ball(base, radius, caps);
    }
    for (const auto& q1 : ball)
      for (const auto& q2 : ball)
        for (const auto& q3 : ball) {
          long long gap = identity_gap(q1, q2, q3);
          ++report.samples;
          if (gap != 0) {
            record_violation(q1, q2, q3, gap);
            goto exhaustive_done;
          }
        }
  exhaustive_done:;
  }

  // seeded random phase
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    int len = 1 + static_cast<int>(i % 7);
    Element q1 = base.random_element(rng, len);
    Element q2 = base.random_element(rng, len + 1);
    Element q3 = base.random_element(rng, len + 2);
    long long gap = identity_gap(q1, q2, q3);
    ++report.samples;
    if (gap != 0) {
      record_violation(q1, q2, q3, gap);
      break;
    }
  }

  report.max_abs = max_abs;
  if (c.claimed_bound && max_abs > *c.claimed_bound) {
    report.bound_ok = false;
    report.pass = false;
  }
  return report;
}

ExtensionElement::ExtensionElement(long long z, Element q, std::shared_ptr<const Cocycle> cocycle)
    : z_(z), q_(std::move(q)), cocycle_(std::move(cocycle)) {}

bool ExtensionElement::equals(const ElementBase& other) const {
  auto* o = dynamic_cast<const ExtensionElement*>(&other);
  return o != nullptr && z_ == o->z_ && cocycle_->name == o->cocycle_->name && q_ == o->q_;
}

std::size_t ExtensionElement::hash() const {
  return mix(mix(0x55ee, static_cast<std::size_t>(z_)), q_.hash());
}

std::string ExtensionElement::str() const {
  return "z^" + std::to_string(z_) + " | " + q_.str();
}

ExtensionGroup::ExtensionGroup(Cocycle cocycle)
    : cocycle_(std::make_shared<const Cocycle>(std::move(cocycle))) {
  auto report = check_cocycle(*cocycle_, 100, 0x5eed);
  if (!report.pass)
    throw Error(ErrorKind::CocycleInvalid,
                cocycle_->name + " fails the cocycle identity near (" +
                    (report.witness.empty() ? "?" : report.witness[0]) + ", ...)");
}

long long ExtensionGroup::reduce_z(long long z) const {
  return cocycle_->characteristic == 2 ? mod2(z) : z;
}

const ExtensionElement& ExtensionGroup::checked(const Element& e) const {
  const auto& x = e.as<ExtensionElement>();
  if (x.cocycle().name != cocycle_->name)
    throw Error(ErrorKind::ModelMismatch,
                "element belongs to ext:" + x.cocycle().name + ", not " + name());
  return x;
}

Element ExtensionGroup::make(long long z, Element q) const {
  return make_element<ExtensionElement>(reduce_z(z), std::move(q), cocycle_);
}

Element ExtensionGroup::identity() const { return make(0, cocycle_->base->identity()); }

Element ExtensionGroup::mul(const Element& a, const Element& b) const {
  const auto& u = checked(a);
  const auto& v = checked(b);
  return make(u.z() + v.z() + cocycle_->value(u.q(), v.q()),
              cocycle_->base->mul(u.q(), v.q()));
}

Element ExtensionGroup::inv(const Element& a) const {
  const auto& u = checked(a);
  Element qinv = cocycle_->base->inv(u.q());
  long long z = -u.z() - cocycle_->value(u.q(), qinv);  // before make: it consumes qinv
  return make(z, std::move(qinv));
}

std::vector<Generator> ExtensionGroup::generators() const {
  std::vector<Generator> out;
  for (const auto& g : cocycle_->base->generators()) out.push_back({g.name, make(0, g.value)});
  out.push_back({"z", make(1, cocycle_->base->identity())});
  return out;
}

long long ExtensionGroup::phi(const Element& e) const { return checked(e).z(); }

Element ExtensionGroup::parse(const std::string& text) const {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  long long z = 0;
  std::string rest = text.substr(i);
  if (rest.rfind("z^", 0) == 0) {
    std::size_t j = 2;
    std::size_t start = j;
    if (j < rest.size() && (rest[j] == '-' || rest[j] == '+')) ++j;
    while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
    if (j == start)
      throw Error(ErrorKind::ParseError, "expected integer after z^ in extension element");
    z = std::stoll(rest.substr(start, j - start));
    while (j < rest.size() && (std::isspace(static_cast<unsigned char>(rest[j])) || rest[j] == '|'))
      ++j;
    rest = rest.substr(j);
    Element q = rest.empty() ? cocycle_->base->identity() : cocycle_->base->parse(rest);
    return make(z, std::move(q));
  }
  // plain word over the lifted generators (including z); else base element text
  try {
    return evaluate_word(text);
  } catch (const Error&) {
    return make(0, cocycle_->base->parse(text));
  }
}

Element ExtensionGroup::random_element(std::mt19937_64& rng, int word_length) const {
  std::uniform_int_distribution<long long> zpick(-2, 2);
  long long z = zpick(rng);
  return make(z, cocycle_->base->random_element(rng, word_length));
}

namespace {

DefectReport defect_over_pairs(const ExtensionGroup& ext, const std::vector<Element>& base_pairs_a,
                               const std::vector<Element>& base_pairs_b) {
  DefectReport report;
  const auto& c = ext.cocycle();
  for (const auto& q1 : base_pairs_a)
    for (const auto& q2 : base_pairs_b) {
      Element g = ext.make(0, q1);
      Element h = ext.make(0, q2);
      long long diff = ext.phi(ext.mul(g, h)) - ext.phi(g) - ext.phi(h);
      if (c.characteristic == 2) diff = mod2(diff);
      long long cval = std::llabs(c.value(q1, q2));
      ++report.pairs;
      if (std::llabs(diff) > report.defect) {
        report.defect = std::llabs(diff);
        report.witness = {q1.str(), q2.str()};
      }
      report.max_abs_cocycle = std::max(report.max_abs_cocycle, cval);
    }
  return report;
}

}  // namespace

DefectReport defect_over_ball(const ExtensionGroup& ext, int radius, const Caps& caps) {
  std::vector<Element> ball = enumerate_ball(ext.base(), radius, caps);
  return defect_over_pairs(ext, ball, ball);
}

DefectReport defect_sampled(const ExtensionGroup& ext, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Element> qs;
  qs.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i)
    qs.push_back(ext.base().random_element(rng, 1 + static_cast<int>(i % 8)));
  // pair consecutive samples rather than the full quadratic set
  DefectReport report;
  const auto& c = ext.cocycle();
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    const Element& q1 = qs[i];
    const Element& q2 = qs[i + 1];
    Element g = ext.make(0, q1);
    Element h = ext.make(0, q2);
    long long diff = ext.phi(ext.mul(g, h)) - ext.phi(g) - ext.phi(h);
    if (c.characteristic == 2) diff = mod2(diff);
    ++report.pairs;
    if (std::llabs(diff) > report.defect) {
      report.defect = std::llabs(diff);
      report.witness = {q1.str(), q2.str()};
    }
    report.max_abs_cocycle = std::max(report.max_abs_cocycle, std::llabs(c.value(q1, q2)));
  }
  return report;
}

TranslationReport translation_number(const ExtensionGroup& ext, const Element& e, long long n,
                                     std::optional<long long> defect) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "iteration budget must be >= 1");
  Element acc = e;
  for (long long k = 2; k <= n; ++k) acc = ext.mul(acc, e);
  TranslationReport report;
  report.n = n;
  report.phi_n = ext.phi(acc);
  report.value = Rational(report.phi_n, n);
  if (defect) report.half_width = Rational(*defect, n);
  return report;
}

}  // namespace medianlab
