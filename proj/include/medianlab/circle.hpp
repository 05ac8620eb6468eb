#pragma once

#include <random>
#include <vector>

#include "medianlab/dyadic.hpp"
#include "medianlab/group.hpp"

namespace medianlab {

// Orientation-preserving PL circle homeomorphism with dyadic breakpoints and
// power-of-two slopes (an element of Thompson's T), stored as its canonical
// lift F on [0,1]: 0 = bp_0 < ... < bp_k = 1, images im_i = F(bp_i) strictly
// increasing with im_0 in [0,1) and im_k = im_0 + 1. Collinear nodes merged,
// so maps are equal exactly when their node lists are.
class CircleMap {
 public:
  CircleMap(std::vector<Dyadic> bp, std::vector<Dyadic> im);
  static CircleMap identity();
  static CircleMap rotation(const Dyadic& r);
  // Random element: two partitions refined by `splits` dyadic halvings plus a
  // cyclic shift between them. Deterministic given the generator state.
  static CircleMap random(std::mt19937_64& rng, int splits);

  const std::vector<Dyadic>& breakpoints() const { return bp_; }
  const std::vector<Dyadic>& images() const { return im_; }
  bool is_identity() const;

  // Canonical lift extended by F(x+1) = F(x)+1 to all dyadic x.
  Dyadic eval_lift(const Dyadic& x) const;
  // Inverse of the extended lift (exact; slopes are powers of two).
  Dyadic inv_eval_lift(const Dyadic& y) const;

  static CircleMap compose(const CircleMap& f, const CircleMap& g);  // f after g
  CircleMap inverse() const;

  bool operator==(const CircleMap& other) const;
  std::size_t hash() const;
  std::string to_json() const;  // {"bp": [[num,exp],...], "im": [[num,exp],...]}
  static CircleMap from_json(const std::string& text);

 private:
  std::vector<Dyadic> bp_;
  std::vector<Dyadic> im_;
};

// Euler cocycle value floor(s(g)(s(h)(0))) for the normalized section s
// (the lift with value at 0 in [0,1)); always 0 or 1.
int euler_value(const CircleMap& g, const CircleMap& h);

// Lift of a circle map to the line: x -> F_base(x) + offset. Commutes with
// integer translation by construction.
class LineMap {
 public:
  explicit LineMap(CircleMap base, long long offset = 0)
      : base_(std::move(base)), offset_(offset) {}
  static LineMap identity();
  static LineMap translation(long long n);

  const CircleMap& base() const { return base_; }
  long long offset() const { return offset_; }
  Dyadic eval(const Dyadic& x) const;
  CircleMap project() const { return base_; }

  static LineMap compose(const LineMap& f, const LineMap& g);  // f after g
  LineMap inverse() const;
  bool operator==(const LineMap& other) const;
  std::size_t hash() const;
  std::string to_json() const;
  static LineMap from_json(const std::string& text);

 private:
  CircleMap base_;
  long long offset_;
};

// The canonical section: the unique lift with value at 0 in [0,1).
LineMap lift(const CircleMap& f);

// --- Group wrappers ---

class CircleElement final : public ElementBase {
 public:
  explicit CircleElement(CircleMap map) : map_(std::move(map)) {}
  const CircleMap& map() const { return map_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override { return map_.hash(); }
  std::string str() const override { return map_.to_json(); }

 private:
  CircleMap map_;
};

class TGroup final : public Group {
 public:
  std::string name() const override { return "T"; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  // No preferred finite generating set is exposed; Cayley-metric questions
  // are out of scope for this model.
  std::vector<Generator> generators() const override { return {}; }
  bool enumerable() const override { return false; }
  // Accepts the JSON breakpoint format, "rot:p/q" with q a power of two,
  // and "id".
  Element parse(const std::string& text) const override;
  Element random_element(std::mt19937_64& rng, int word_length) const override;
};

class LineElement final : public ElementBase {
 public:
  explicit LineElement(LineMap map) : map_(std::move(map)) {}
  const LineMap& map() const { return map_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override { return map_.hash(); }
  std::string str() const override { return map_.to_json(); }

 private:
  LineMap map_;
};

// Lifts of T to the line (homeomorphisms commuting with integer translation).
class TBarGroup final : public Group {
 public:
  std::string name() const override { return "Tbar"; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;  // tau = translation by 1
  bool enumerable() const override { return false; }
  Element parse(const std::string& text) const override;
  Element random_element(std::mt19937_64& rng, int word_length) const override;
};

}  // namespace medianlab
