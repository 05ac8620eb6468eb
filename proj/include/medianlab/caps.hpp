#pragma once

#include <cstddef>

namespace medianlab {

// Resource limits. Analyses fail loudly (CapExceeded / BudgetExceeded) when a
// limit is hit; partial results are never reported as complete.
struct Caps {
  std::size_t vertex_cap = 2048;         // dense distance matrix stays desk-scale
  std::size_t ball_cap = 5'000'000;      // Cayley ball element count
  std::size_t hyperplane_cap = 24;       // crossing-clique search bound
  std::size_t hom_budget = 100'000'000;  // assignments visited per hom count
};

// Defaults, with MEDIAN_LAB_CAP (element count) overriding ball_cap when set.
Caps default_caps();

}  // namespace medianlab
