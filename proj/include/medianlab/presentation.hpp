#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "medianlab/group.hpp"
#include "medianlab/lamplighter.hpp"

namespace medianlab {

// One letter of a relator template; the exponent is coeff * n + cnst where n
// is the family parameter (coeff = 0 for plain relators).
struct SymLetter {
  std::string name;
  long long coeff = 0;
  long long cnst = 0;
  bool operator==(const SymLetter&) const = default;
};

using SymWord = std::vector<SymLetter>;

SymWord instantiate(const SymWord& word, long long n);  // drops zero exponents
SymWord invert(const SymWord& word);

// Parametrized relator lhs = rhs(n) for n >= 1, where rhs depends on whether
// n lies in the presentation's set I (unconditional families use one rhs).
struct RelatorFamily {
  SymWord lhs;
  SymWord rhs_in;     // branch for n in I
  SymWord rhs_notin;  // branch for n notin I
  bool conditional = false;
  // Relator word lhs * rhs^-1 for the given n.
  SymWord relator_at(long long n, const std::optional<TwistSet>& set) const;
};

struct FinitePresentation {
  std::string name;
  std::vector<std::string> gens;
  std::vector<SymWord> relators;
  std::vector<RelatorFamily> families;
  std::optional<TwistSet> twist_set;  // the I of the grammar
  std::string shift_gen;              // generator carrying symbolic exponents

  // Largest family parameter that can impose a new constraint when the shift
  // generator's image has the given order: beyond order + max(I) both sides
  // of every family relator repeat, so instances there duplicate earlier
  // ones. (Plain periodicity suffices only for unconditional families; a
  // finite I shifts where the rhs stabilizes.)
  long long family_bound(long long shift_order) const;
};

// Text format, clauses separated by ';':
//   gens: a t z
//   rel: a^2, z^2, [z,a], [z,t], x^2 = y^3
//   fam(n>=1): comm(t^n a t^-n, a) = z if n notin I else 1
//   I = {1,3} | all
// Words: names with optional ^exponent (integer, n or -n), [u,v] and
// comm(u,v) commutators, (w)^k grouping. ParseError carries line/column.
FinitePresentation parse_presentation(const std::string& text);

// Builtins: "lamplighter", "GI:I=...", "vondyck:a,b,c", "triangle:a,b,c",
// "homsphere" (the (2,3,7) central extension), "surface:g".
FinitePresentation builtin_presentation(const std::string& name);
// Accepts a builtin name or inline presentation text (detected by "gens:").
FinitePresentation resolve_presentation(const std::string& spec);

struct RelatorCheckReport {
  bool pass = true;
  std::size_t checked = 0;
  std::string failed_relator;  // word text on failure
  long long failed_n = -1;     // family parameter, -1 for plain relators
  std::string value;           // model value the relator evaluated to
};

// Evaluates every relator (families truncated at n_bound) under the
// assignment; UnknownGenerator when a generator lacks an assignment.
RelatorCheckReport check_relators(const FinitePresentation& p, const Group& model,
                                  const std::map<std::string, Element>& assignment,
                                  long long n_bound);

// Multiplication table of a small finite group; validated at construction.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> table);
  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  int power(int a, long long e) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

// "Z<k>" for k <= 16, "D4", "Q8", "S3", "S4".
FiniteGroupTable make_target(const std::string& name);
std::vector<FiniteGroupTable> targets_up_to_order(int max_order);

struct HomCountReport {
  std::string presentation;
  std::string target;
  long long count = 0;
  long long truncation_bound = 0;  // largest family bound used
  double elapsed_seconds = 0.0;
};

// Exact count of homomorphisms into the target (backtracking with prefix
// pruning). Throws BudgetExceeded when |target|^#gens exceeds the budget.
HomCountReport count_homs(const FinitePresentation& p, const FiniteGroupTable& target,
                          const Caps& caps = default_caps(), unsigned workers = 1);
// Independent oracle: no pruning, enumerates every assignment.
HomCountReport count_homs_naive(const FinitePresentation& p, const FiniteGroupTable& target,
                                const Caps& caps = default_caps());

struct SeparationVerdict {
  bool separated = false;
  std::string target;  // first separating target
  long long count_a = 0;
  long long count_b = 0;
  std::string text() const;
};

SeparationVerdict separate(const FinitePresentation& a, const FinitePresentation& b,
                           const std::vector<FiniteGroupTable>& targets,
                           const Caps& caps = default_caps());

std::string word_text(const SymWord& word);

}  // namespace medianlab
