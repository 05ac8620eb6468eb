#pragma once

#include <vector>

#include "medianlab/group.hpp"

namespace medianlab {

// Freely reduced word; letters are 1..k for generators, negatives for inverses.
class FreeWord final : public ElementBase {
 public:
  explicit FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  const std::vector<int>& letters() const { return letters_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;

 private:
  std::vector<int> letters_;
};

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank);
  std::string name() const override { return "free:" + std::to_string(rank_); }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;
  std::optional<long long> length_oracle(const Element& e) const override;
  int rank() const { return rank_; }

 private:
  int rank_;
};

class ZkElement final : public ElementBase {
 public:
  explicit ZkElement(std::vector<long long> coords) : coords_(std::move(coords)) {}
  const std::vector<long long>& coords() const { return coords_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;

 private:
  std::vector<long long> coords_;
};

class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(int rank);
  std::string name() const override { return "zk:" + std::to_string(rank_); }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;
  std::optional<long long> length_oracle(const Element& e) const override;
  Element parse(const std::string& text) const override;  // also accepts "(3,4)"
  int rank() const { return rank_; }

 private:
  int rank_;
};

// Integer Heisenberg group, the unbounded-cocycle control model:
// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
class HeisenbergElement final : public ElementBase {
 public:
  HeisenbergElement(long long x, long long y, long long z) : x_(x), y_(y), z_(z) {}
  long long x() const { return x_; }
  long long y() const { return y_; }
  long long z() const { return z_; }
  bool equals(const ElementBase& other) const override;
  std::size_t hash() const override;
  std::string str() const override;

 private:
  long long x_, y_, z_;
};

class HeisenbergGroup final : public Group {
 public:
  std::string name() const override { return "heisenberg"; }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;
  Element parse(const std::string& text) const override;  // also accepts "(x,y,z)"
};

// Shared tuple parser: "(3, -4, 5)" -> coordinates; ParseError on junk.
std::vector<long long> parse_int_tuple(const std::string& text, std::size_t expected);

}  // namespace medianlab
