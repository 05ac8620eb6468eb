#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "medianlab/dyadic.hpp"
#include "medianlab/group.hpp"

namespace medianlab {

// Inhomogeneous 2-cocycle on a base group, Z-valued (characteristic 0) or
// Z/2-valued (characteristic 2). Normalized: c(1,q) = c(q,1) = 0.
struct Cocycle {
  std::string name;
  std::shared_ptr<const Group> base;
  int characteristic = 0;
  std::function<long long(const Element&, const Element&)> value;
  std::optional<long long> claimed_bound;
};

// Registry: "trivial", "trivial:<group spec>", "heisenberg", "euler:T",
// "twist:I=...", "corrupted" (deliberately broken control).
Cocycle make_cocycle(const std::string& name);

struct CocycleCheckReport {
  std::string name;
  std::size_t samples = 0;  // triples checked (exhaustive + random)
  bool pass = true;
  std::vector<std::string> witness;  // violating triple (q1, q2, q3) texts
  long long violation = 0;           // value of the cocycle identity there
  bool bound_ok = true;
  std::optional<long long> max_abs;  // largest |c| seen
};

// Checks c(q2,q3) - c(q1q2,q3) + c(q1,q2q3) - c(q1,q2) = 0 (mod 2 in
// characteristic 2). Exhaustive over a small Cayley ball when the base is
// enumerable, then seeded random triples up to `samples`. Deterministic.
CocycleCheckReport check_cocycle(const Cocycle& c, std::size_t samples, std::uint64_t seed);

class ExtensionElement final : public ElementBase {
 public:
  ExtensionElement(long long z, Element q, std::shared_ptr<const Cocycle> cocycle);
  long long z() const { return z_; }
  const Element& q() const { return q_; }
  const Cocycle& cocycle() const { return *cocycle_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;  // "z^k | <base element text>"

 private:
  long long z_;
  Element q_;
  std::shared_ptr<const Cocycle> cocycle_;
};

// Central extension with product (z1+z2+c(q1,q2), q1*q2). Generators are the
// lifts (0, s) of the base generators plus the central z = (1, 1).
class ExtensionGroup final : public Group {
 public:
  // Validates the cocycle by sampling; throws CocycleInvalid on failure.
  explicit ExtensionGroup(Cocycle cocycle);
  std::string name() const override { return "ext:" + cocycle_->name; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;
  bool enumerable() const override { return cocycle_->base->enumerable(); }
  Element parse(const std::string& text) const override;
  Element random_element(std::mt19937_64& rng, int word_length) const override;

  const Cocycle& cocycle() const { return *cocycle_; }
  const Group& base() const { return *cocycle_->base; }
  Element make(long long z, Element q) const;
  // phi(z, q) = z, the quasimorphism of the extension.
  long long phi(const Element& e) const;

 private:
  long long reduce_z(long long z) const;
  const ExtensionElement& checked(const Element& e) const;
  std::shared_ptr<const Cocycle> cocycle_;
};

struct DefectReport {
  long long defect = 0;          // max |phi(gh) - phi(g) - phi(h)| over the sample
  long long max_abs_cocycle = 0; // max |c(q1,q2)| over the induced base pairs
  std::size_t pairs = 0;
  std::vector<std::string> witness;  // pair attaining the defect
};

// Exhaustive over base pairs in the Cayley ball of the given radius.
DefectReport defect_over_ball(const ExtensionGroup& ext, int radius,
                              const Caps& caps = default_caps());
// Seeded random pairs (for non-enumerable bases such as T).
DefectReport defect_sampled(const ExtensionGroup& ext, std::size_t samples, std::uint64_t seed);

struct TranslationReport {
  Rational value;                      // phi(e^n) / n
  long long n = 0;
  long long phi_n = 0;
  std::optional<Rational> half_width;  // defect / n when a defect is known
};

TranslationReport translation_number(const ExtensionGroup& ext, const Element& e, long long n,
                                     std::optional<long long> defect = std::nullopt);

}  // namespace medianlab
