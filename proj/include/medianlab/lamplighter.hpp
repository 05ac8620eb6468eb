#pragma once

#include <memory>
#include <vector>

#include "medianlab/group.hpp"

namespace medianlab {

// Subset I of {1,2,...} controlling the twist: all, or an explicit finite set.
class TwistSet {
 public:
  static TwistSet all();
  static TwistSet finite(std::vector<int> members);  // sorted, deduplicated
  static TwistSet parse(const std::string& text);    // "all", "{}", "{1,3}"

  // beta(d) for d >= 1: 0 when d in I, 1 otherwise.
  int beta(int d) const;
  bool is_all() const { return all_; }
  const std::vector<int>& members() const { return members_; }
  bool operator==(const TwistSet& other) const;
  std::string str() const;  // "all" or "{1,3}"

 private:
  TwistSet() = default;
  bool all_ = false;
  std::vector<int> members_;
};

// Wreath-product normal form: lamps on at finitely many integer positions,
// plus the shift. Product: (L1,n1)(L2,n2) = (L1 xor (L2+n1), n1+n2).
class LamplighterElement final : public ElementBase {
 public:
  LamplighterElement(std::vector<int> lamps, long long shift);
  const std::vector<int>& lamps() const { return lamps_; }
  long long shift() const { return shift_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;

 private:
  std::vector<int> lamps_;  // strictly increasing
  long long shift_;
};

class LamplighterGroup final : public Group {
 public:
  std::string name() const override { return "lamplighter"; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;  // a (lamp at 0), t (shift)
  Element parse(const std::string& text) const override;  // "{0,2} · t^-1"
};

// Central extension G_I: normal form z^eps a_{i1}...a_{ik} t^n with the
// commutation rule a_p a_q = a_q a_p z^{beta(p-q)} for p > q.
class TwistedElement final : public ElementBase {
 public:
  TwistedElement(int eps, std::vector<int> lamps, long long shift,
                 std::shared_ptr<const TwistSet> family);
  int eps() const { return eps_; }
  const std::vector<int>& lamps() const { return lamps_; }
  long long shift() const { return shift_; }
  const TwistSet& family() const { return *family_; }
  const std::shared_ptr<const TwistSet>& family_ptr() const { return family_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;  // "z^e · {p1,p2} · t^n"

 private:
  int eps_;
  std::vector<int> lamps_;
  long long shift_;
  std::shared_ptr<const TwistSet> family_;
};

class TwistedGroup final : public Group {
 public:
  explicit TwistedGroup(TwistSet family);
  std::string name() const override { return "GI:I=" + family_->str(); }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;  // a, t, z
  Element parse(const std::string& text) const override;
  const TwistSet& family() const { return *family_; }

 private:
  const TwistedElement& checked(const Element& e) const;
  std::shared_ptr<const TwistSet> family_;
};

// Crossing count gamma mod 2 for merging lamp words (shared with tests):
// sum of beta(p - q) over p in left, q in right_shifted, p > q.
int crossing_parity(const TwistSet& family, const std::vector<int>& left,
                    const std::vector<int>& right_shifted);

// Symmetric difference of sorted integer sets.
std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace medianlab
