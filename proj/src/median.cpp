#include "medianlab/median.hpp"

#include <algorithm>
#include <numeric>

#include "medianlab/error.hpp"
#include "medianlab/parallel.hpp"

namespace medianlab {

std::vector<int> triple_medians(const DistanceMatrix& dm, const Triple& t, int delta) {
  const auto [x, y, z] = t;
  std::vector<int> out;
  const int dxy = dm(x, y), dyz = dm(y, z), dxz = dm(x, z);
  for (int m = 0; m < dm.size(); ++m) {
    if (std::abs(dm(x, m) + dm(m, y) - dxy) > delta) continue;
    if (std::abs(dm(y, m) + dm(m, z) - dyz) > delta) continue;
    if (std::abs(dm(x, m) + dm(m, z) - dxz) > delta) continue;
    out.push_back(m);
  }
  return out;
}

namespace {

// Visits canonical triples x <= y <= z in lexicographic order; the linear
// index makes the enumeration partitionable across workers.
inline Triple triple_at(std::size_t index, int n) {
  // index -> (x, y, z): count triples with first coordinate < x, etc.
  std::size_t rest = index;
  for (int x = 0; x < n; ++x) {
    const std::size_t m = static_cast<std::size_t>(n - x);
    const std::size_t block = m * (m + 1) / 2;  // pairs (y, z) with x <= y <= z
    if (rest >= block) {
      rest -= block;
      continue;
    }
    for (int y = x; y < n; ++y) {
      const std::size_t row = static_cast<std::size_t>(n - y);
      if (rest >= row) {
        rest -= row;
        continue;
      }
      return {x, y, static_cast<int>(static_cast<std::size_t>(y) + rest)};
    }
  }
  throw Error(ErrorKind::Internal, "triple index out of range");
}

inline std::size_t triple_count(int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  return m * (m + 1) * (m + 2) / 6;
}

}  // namespace

MedianReport check_median(const Graph& g, const DistanceMatrix& dm, unsigned workers) {
  const int n = g.vertex_count();
  const std::size_t total = triple_count(n);
  // Per-worker least violating index; merged after the join, so the witness
  // does not depend on the worker count.
  std::vector<std::size_t> least(std::max(workers, 1u), total);
  parallel_chunks(total, workers, [&](std::size_t lo, std::size_t hi, unsigned w) {
    for (std::size_t i = lo; i < hi; ++i) {
      Triple t = triple_at(i, n);
      if (triple_medians(dm, t).size() != 1) {
        least[w] = i;  // first hit in the chunk is the least in it
        return;
      }
    }
  });
  std::size_t best = total;
  for (std::size_t v : least) best = std::min(best, v);

  MedianReport report;
  report.is_median = (best == total);
  if (!report.is_median) {
    Triple t = triple_at(best, n);
    report.witness = t;
    report.witness_medians = triple_medians(dm, t);
  }
  return report;
}

AlmostMedianFrontier almost_median_frontier(const Graph& g, const DistanceMatrix& dm,
                                            int delta_max, unsigned workers) {
  if (delta_max < 0) throw Error(ErrorKind::InvalidParam, "delta_max must be nonnegative");
  const int n = g.vertex_count();
  const std::size_t total = triple_count(n);
  AlmostMedianFrontier frontier;
  frontier.delta_max = delta_max;

  for (int delta = 0; delta <= delta_max; ++delta) {
    FrontierEntry entry;
    entry.delta = delta;
    std::vector<std::size_t> least(std::max(workers, 1u), total);
    std::vector<int> local_diam(std::max(workers, 1u), 0);
    parallel_chunks(total, workers, [&](std::size_t lo, std::size_t hi, unsigned w) {
      for (std::size_t i = lo; i < hi; ++i) {
        Triple t = triple_at(i, n);
        auto med = triple_medians(dm, t, delta);
        if (med.empty()) {
          if (i < least[w]) least[w] = i;
          return;
        }
        for (std::size_t a = 0; a < med.size(); ++a)
          for (std::size_t b = a + 1; b < med.size(); ++b)
            local_diam[w] = std::max(local_diam[w], dm(med[a], med[b]));
      }
    });
    std::size_t best = total;
    for (std::size_t v : least) best = std::min(best, v);
    if (best < total) {
      entry.feasible = false;
      entry.witness = triple_at(best, n);
      entry.max_diameter = -1;
    } else {
      entry.feasible = true;
      entry.max_diameter = *std::max_element(local_diam.begin(), local_diam.end());
    }
    frontier.entries.push_back(entry);
  }
  return frontier;
}

std::vector<Hyperplane> hyperplanes(const Graph& g, const DistanceMatrix& dm) {
  auto report = check_median(g, dm);
  if (!report.is_median)
    throw Error(ErrorKind::NotMedian, "hyperplanes are only defined on median graphs");

  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());

  // union-find over edges under the Djoković relation
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [u, v] = edges[i];
      auto [x, y] = edges[j];
      if (dm(u, x) + dm(v, y) != dm(u, y) + dm(v, x)) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }

  std::vector<Hyperplane> out;
  std::vector<int> class_of(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    int root = find(i);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[class_of[root]].edge_class.push_back(edges[i]);
  }

  // halfspaces: components after deleting the class (must be exactly two)
  const int n = g.vertex_count();
  for (auto& h : out) {
    std::vector<char> removed_mark(static_cast<std::size_t>(n), 0);
    auto in_class = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return std::binary_search(h.edge_class.begin(), h.edge_class.end(), Edge{a, b});
    };
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
      if (side[start] >= 0) continue;
      if (components >= 2)
        throw Error(ErrorKind::Internal, "hyperplane class split graph into more than two parts");
      std::vector<int> queue{start};
      side[start] = components;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
          if (side[w] >= 0 || in_class(v, w)) continue;
          side[w] = components;
          queue.push_back(w);
        }
      }
      ++components;
    }
    if (components != 2)
      throw Error(ErrorKind::Internal, "hyperplane class does not separate the graph");
    for (int v = 0; v < n; ++v) h.halfspaces[side[v]].push_back(v);
  }
  return out;
}

int cubical_dimension(const std::vector<Hyperplane>& hs, const Graph& g, const Caps& caps) {
  const std::size_t k = hs.size();
  if (k > caps.hyperplane_cap)
    throw Error(ErrorKind::TooManyHyperplanes,
                std::to_string(k) + " hyperplanes exceed cap " +
                    std::to_string(caps.hyperplane_cap));
  if (k == 0) return 0;

  const int n = g.vertex_count();
  // vertex membership bitmask per halfspace pair, then pairwise crossing test
  std::vector<std::vector<char>> in_half(k, std::vector<char>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < k; ++i)
    for (int v : hs[i].halfspaces[0]) in_half[i][static_cast<std::size_t>(v)] = 1;

  auto crosses = [&](std::size_t i, std::size_t j) {
    bool quad[2][2] = {{false, false}, {false, false}};
    for (int v = 0; v < n; ++v) quad[in_half[i][v]][in_half[j][v]] = true;
    return quad[0][0] && quad[0][1] && quad[1][0] && quad[1][1];
  };

  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (crosses(i, j)) {
        adj[i] |= (1u << j);
        adj[j] |= (1u << i);
      }

  // branch-and-bound max clique over <= 24 vertices
  int best = 0;
  auto expand = [&](auto&& self, std::uint32_t cand, int size) -> void {
    best = std::max(best, size);
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cand & adj[static_cast<std::size_t>(v)], size + 1);
    }
  };
  std::uint32_t all = k >= 32 ? ~0u : ((1u << k) - 1);
  expand(expand, all, 0);
  return best;
}

}  // namespace medianlab
