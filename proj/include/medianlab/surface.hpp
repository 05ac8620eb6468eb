#pragma once

#include <map>
#include <memory>
#include <vector>

#include "medianlab/group.hpp"

namespace medianlab {

// Dehn replacement table for the genus-g surface relator
// R = [a1,b1]...[ag,bg]: every prefix u of a cyclic rotation of R or R^-1
// with |u| > |R|/2 maps to the shorter equal word (inverse of the rest).
// C'(1/6) holds (all pieces have length 1 < 4g/6), so reduction to the empty
// word decides the word problem.
class RelatorTable {
 public:
  explicit RelatorTable(int genus);
  int genus() const { return genus_; }
  int relator_length() const { return 4 * genus_; }
  const std::vector<int>& relator() const { return relator_; }
  // Dehn reduction: freely reduce, then repeatedly replace the leftmost
  // longest table subword; terminates since replacements shorten.
  std::vector<int> reduce(std::vector<int> word) const;

 private:
  int genus_;
  std::vector<int> relator_;
  std::map<std::vector<int>, std::vector<int>> replacements_;
};

// Letters 1..2g are a1, b1, a2, b2, ..., negatives are inverses. Stored words
// are Dehn-reduced (not canonical); equality reduces u * v^-1.
class SurfaceElement final : public ElementBase {
 public:
  SurfaceElement(std::vector<int> word, std::shared_ptr<const RelatorTable> table);
  const std::vector<int>& word() const { return word_; }
  const RelatorTable& table() const { return *table_; }
  const std::shared_ptr<const RelatorTable>& table_ptr() const { return table_; }
  bool equals(const ElementBase& other) const override;
  // Abelianization exponent vector (a class invariant since the relator is a
  // product of commutators); buckets may collide, equality disambiguates.
  std::size_t hash() const override;
  std::string str() const override;

 private:
  std::vector<int> word_;
  std::shared_ptr<const RelatorTable> table_;
};

class SurfaceGroup final : public Group {
 public:
  explicit SurfaceGroup(int genus);
  std::string name() const override { return "surface:" + std::to_string(genus()); }
  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::vector<Generator> generators() const override;  // a1, b1, ..., ag, bg
  int genus() const { return table_->genus(); }
  const RelatorTable& table() const { return *table_; }
  Element from_word(std::vector<int> word) const;

 private:
  std::shared_ptr<const RelatorTable> table_;
};

std::string surface_letter_name(int letter);  // 1 -> "a1", -2 -> "B1", 3 -> "a2"

}  // namespace medianlab
