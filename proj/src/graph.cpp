#include "medianlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "medianlab/error.hpp"
#include "medianlab/parallel.hpp"

namespace medianlab {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n <= 0) throw Error(ErrorKind::InvalidParam, "graph needs at least one vertex");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw Error(ErrorKind::InvalidParam, "label count does not match vertex count");

  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::InvalidParam,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v)
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw Error(ErrorKind::DuplicateEdge,
                  "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  edges_.assign(seen.begin(), seen.end());

  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());

  // connectivity
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adjacency_[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n) {
    int missing = 0;
    while (visited[missing]) ++missing;
    throw Error(ErrorKind::Disconnected,
                "vertex " + std::to_string(missing) + " unreachable from vertex 0");
  }
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[static_cast<std::size_t>(v)];
}

DistanceMatrix::DistanceMatrix(const Graph& g, unsigned workers) : n_(g.vertex_count()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, -1);
  parallel_chunks(static_cast<std::size_t>(n_), workers, [&](std::size_t lo, std::size_t hi, unsigned) {
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n_));
    for (std::size_t s = lo; s < hi; ++s) {
      int* row = d_.data() + s * n_;
      queue.clear();
      queue.push_back(static_cast<int>(s));
      row[s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
          if (row[w] < 0) {
            row[w] = row[v] + 1;
            queue.push_back(w);
          }
      }
    }
  });
  diameter_ = *std::max_element(d_.begin(), d_.end());
}

std::vector<int> delta_interval(const DistanceMatrix& dm, const IntervalQuery& q) {
  if (q.delta < 0) throw Error(ErrorKind::InvalidParam, "delta must be nonnegative");
  if (q.x < 0 || q.x >= dm.size() || q.y < 0 || q.y >= dm.size())
    throw Error(ErrorKind::InvalidParam, "interval endpoint out of range");
  std::vector<int> out;
  const int dxy = dm(q.x, q.y);
  for (int z = 0; z < dm.size(); ++z) {
    int gap = dm(q.x, z) + dm(z, q.y) - dxy;
    if (std::abs(gap) <= q.delta) out.push_back(z);
  }
  return out;
}

Graph l1_product(const Graph& g1, const Graph& g2, const Caps& caps) {
  const std::size_t n1 = static_cast<std::size_t>(g1.vertex_count());
  const std::size_t n2 = static_cast<std::size_t>(g2.vertex_count());
  if (n1 > caps.vertex_cap / n2)
    throw Error(ErrorKind::SizeOverflow,
                "product would have " + std::to_string(n1) + " * " + std::to_string(n2) +
                    " vertices (cap " + std::to_string(caps.vertex_cap) + ")");
  const int n = static_cast<int>(n1 * n2);
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(n1); ++i)
    for (auto [u, v] : g2.edges())
      edges.push_back({i * static_cast<int>(n2) + u, i * static_cast<int>(n2) + v});
  for (auto [u, v] : g1.edges())
    for (int j = 0; j < static_cast<int>(n2); ++j)
      edges.push_back({u * static_cast<int>(n2) + j, v * static_cast<int>(n2) + j});

  std::vector<std::string> labels;
  if (g1.has_labels() && g2.has_labels()) {
    labels.reserve(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
        labels.push_back("(" + g1.label(static_cast<int>(i)) + "," +
                         g2.label(static_cast<int>(j)) + ")");
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Graph hypercube(int k) {
  if (k < 1 || k > 20) throw Error(ErrorKind::InvalidParam, "hypercube dimension out of range");
  const int n = 1 << k;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::string bits(static_cast<std::size_t>(k), '0');
    for (int b = 0; b < k; ++b)
      if (v & (1 << b)) bits[static_cast<std::size_t>(k - 1 - b)] = '1';
    labels.push_back(bits);
    for (int b = 0; b < k; ++b)
      if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
  }
  Graph g(n, std::move(edges), std::move(labels));
  g.name = "Q" + std::to_string(k);
  return g;
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorKind::InvalidParam, "grid needs positive sides");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  Graph g(rows * cols, std::move(edges));
  g.name = "grid" + std::to_string(rows) + "x" + std::to_string(cols);
  return g;
}

Graph path(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  Graph g(n, std::move(edges));
  g.name = "P" + std::to_string(n);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParam, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  Graph g(n, std::move(edges));
  g.name = "C" + std::to_string(n);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  // each vertex v >= 1 attaches to a uniform earlier vertex
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  Graph g(n, std::move(edges));
  g.name = "tree" + std::to_string(n);
  return g;
}

Graph quasi_line(int lambda, int lo, int hi) {
  if (lambda < 1) throw Error(ErrorKind::InvalidParam, "lambda must be positive");
  if (lo > hi) throw Error(ErrorKind::InvalidParam, "empty window");
  const int n = hi - lo + 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(lo + i));
    for (int j = i + 1; j < n && j - i <= lambda; ++j) edges.push_back({i, j});
  }
  Graph g(n, std::move(edges), std::move(labels));
  g.name = "L" + std::to_string(lambda) + "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  return g;
}

Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    chosen.insert({u, v});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  int placed = 0;
  for (int attempt = 0; placed < extra_edges && attempt < 50 * extra_edges + 100; ++attempt) {
    int u = any(rng), v = any(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) ++placed;
  }
  edges.assign(chosen.begin(), chosen.end());
  return Graph(n, std::move(edges));
}

std::string serialize(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::EdgeList: {
      out << "# " << (g.name.empty() ? std::string("graph") : g.name) << ": "
          << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      out << "n " << g.vertex_count() << "\n";
      for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
      return out.str();
    }
    case GraphFormat::Dot: {
      out << "graph " << (g.name.empty() ? std::string("G") : g.name) << " {\n";
      for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
      }
      for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      return out.str();
    }
    case GraphFormat::Json: {
      nlohmann::ordered_json j;
      j["n"] = g.vertex_count();
      if (!g.name.empty()) j["name"] = g.name;
      auto& je = j["edges"] = nlohmann::ordered_json::array();
      for (auto [u, v] : g.edges()) je.push_back({u, v});
      if (g.has_labels()) {
        auto& jl = j["labels"] = nlohmann::ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v) jl.push_back(g.label(v));
      }
      out << j.dump(2) << "\n";
      return out.str();
    }
  }
  throw Error(ErrorKind::Internal, "unknown graph format");
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.resize(pos);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "n") {
      if (!(fields >> n) || n <= 0) parse_fail(line_no, 1, "expected positive vertex count after 'n'");
      continue;
    }
    int u = 0, v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      parse_fail(line_no, 1, "expected vertex index, got '" + first + "'");
    }
    if (!(fields >> v)) parse_fail(line_no, static_cast<int>(first.size()) + 2, "expected second endpoint");
    std::string extra;
    if (fields >> extra)
      parse_fail(line_no, static_cast<int>(line.find(extra)) + 1, "unexpected token '" + extra + "'");
    edges.push_back({u, v});
  }
  if (n < 0) {
    for (auto [u, v] : edges) n = std::max({n, u, v});
    ++n;
  }
  if (n <= 0) parse_fail(line_no == 0 ? 1 : line_no, 1, "no vertices found");
  return Graph(n, std::move(edges));
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; recover line/column for the contract
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail(line, col, "invalid JSON");
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::ParseError, "line 1, column 1: expected object with 'n' and 'edges'");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::ParseError, "line 1, column 1: 'n' must be an integer");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error(ErrorKind::ParseError, "line 1, column 1: each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  Graph g(n, std::move(edges), std::move(labels));
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  return g;
}

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_graph(text);
    return parse_edge_list(text);
  }
  throw Error(ErrorKind::ParseError, "line 1, column 1: empty input");
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n > 10) throw Error(ErrorKind::InvalidParam, "isomorphic_small handles at most 10 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace medianlab
