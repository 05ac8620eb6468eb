#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "medianlab/caps.hpp"

namespace medianlab {

using Edge = std::pair<int, int>;

// Finite simple connected undirected graph. Immutable after construction;
// constructors validate (SelfLoop, DuplicateEdge, Disconnected).
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;
  // Canonical edge list: each edge once as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const;
  std::string name;  // optional display name carried into reports

 private:
  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// All-pairs shortest path distances (edge-count metric), dense.
// Per-source BFS rows may be computed by several workers; the result is
// identical regardless of worker count.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g, unsigned workers = 1);

  int operator()(int x, int y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }
  int size() const { return n_; }
  int diameter() const { return diameter_; }

 private:
  int n_;
  int diameter_;
  std::vector<int> d_;
};

struct IntervalQuery {
  int x;
  int y;
  int delta;
};

// I_delta(x, y) = { z : |d(x,y) - d(x,z) - d(z,y)| <= delta }, ascending.
// delta = 0 is the classical geodesic interval.
std::vector<int> delta_interval(const DistanceMatrix& dm, const IntervalQuery& q);

// Cartesian product: vertices are pairs, moves change one coordinate along an
// edge. Distances add coordinatewise. Vertex (i, j) of the factors maps to
// index i * g2.vertex_count() + j.
Graph l1_product(const Graph& g1, const Graph& g2, const Caps& caps = default_caps());

// --- generators (deterministic; random_tree is seeded) ---
Graph hypercube(int k);                             // labels are bitstrings
Graph grid(int rows, int cols);
Graph path(int n);
Graph cycle(int n);
Graph random_tree(int n, std::uint64_t seed);
// Quasi-line L_lambda restricted to the vertex window [lo, hi]: vertices are
// the integers of the window, edges join integers at distance <= lambda.
// Geodesics between window points stay inside the window, so the window is
// isometric to its span in the infinite graph; d(i, j) = ceil(|i-j| / lambda).
Graph quasi_line(int lambda, int lo, int hi);

// Random connected graph: spanning tree plus extra random edges (test corpora).
Graph random_connected(int n, int extra_edges, std::uint64_t seed);

// --- serialization ---
enum class GraphFormat { EdgeList, Dot, Json };

std::string serialize(const Graph& g, GraphFormat format);
// Accepts the edge-list format ("u v" per line, '#' comments, 0-indexed) or
// the JSON schema {"n": int, "edges": [[u, v], ...]}; detected by first
// non-space character. ParseError carries line/column.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_json_graph(std::string_view text);

// Brute-force isomorphism test for tiny graphs (n <= 10); test helper.
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace medianlab
