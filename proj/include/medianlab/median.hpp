#pragma once

#include <array>
#include <optional>
#include <vector>

#include "medianlab/caps.hpp"
#include "medianlab/graph.hpp"

namespace medianlab {

using Triple = std::array<int, 3>;

struct MedianReport {
  bool is_median = false;
  // Lexicographically least triple whose I0-triple-intersection is not a
  // singleton; absent when the graph is median.
  std::optional<Triple> witness;
  // Median points of the witness triple (empty or >= 2 entries).
  std::vector<int> witness_medians;
};

// Medians of one triple: I0(x,y) ∩ I0(y,z) ∩ I0(x,z).
std::vector<int> triple_medians(const DistanceMatrix& dm, const Triple& t, int delta = 0);

MedianReport check_median(const Graph& g, const DistanceMatrix& dm, unsigned workers = 1);

struct FrontierEntry {
  int delta = 0;
  bool feasible = false;
  int max_diameter = -1;              // Δ(δ); -1 when infeasible
  std::optional<Triple> witness;      // least empty triple when infeasible
};

struct AlmostMedianFrontier {
  std::vector<FrontierEntry> entries;  // delta = 0 .. delta_max in order
  int delta_max = 0;
};

// Exhaustive (δ, Δ) frontier for δ in 0..delta_max. Feasible means every
// triple intersection is non-empty; Δ(δ) is the largest diameter among them.
AlmostMedianFrontier almost_median_frontier(const Graph& g, const DistanceMatrix& dm,
                                            int delta_max, unsigned workers = 1);

struct Hyperplane {
  std::vector<Edge> edge_class;        // one Θ*-class, canonical edge order
  std::vector<int> halfspaces[2];      // sorted; [0] holds the smaller least vertex
};

// Djoković classes with transitive closure; requires a median graph.
// Throws NotMedian otherwise and Internal if a class fails to split the
// graph into exactly two parts (cannot happen on median graphs).
std::vector<Hyperplane> hyperplanes(const Graph& g, const DistanceMatrix& dm);

// Max count of pairwise-crossing hyperplanes (two cross when all four
// halfspace intersections are non-empty). Exhaustive clique search; throws
// TooManyHyperplanes above caps.hyperplane_cap.
int cubical_dimension(const std::vector<Hyperplane>& hs, const Graph& g,
                      const Caps& caps = default_caps());

}  // namespace medianlab
