#include <algorithm>

#include "doctest.h"
#include "medianlab/error.hpp"
#include "medianlab/graph.hpp"

using namespace medianlab;

TEST_CASE("construction canonicalizes and validates") {
  Graph g(4, {{2, 1}, {0, 1}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 3));

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);                  // self loop
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);          // duplicate
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), Error);                  // out of range
}

TEST_CASE("distance matrix agrees with known metrics") {
  Graph q3 = hypercube(3);
  DistanceMatrix dm(q3);
  CHECK(dm.diameter() == 3);
  CHECK(dm(0, 7) == 3);  // antipodal corners
  CHECK(dm(0, 3) == 2);

  Graph c6 = cycle(6);
  DistanceMatrix dc(c6);
  CHECK(dc(0, 3) == 3);
  CHECK(dc(1, 5) == 2);
  CHECK(dc.diameter() == 3);

  CHECK_THROWS_AS(Graph(2, {}), Error);  // disconnected
}

TEST_CASE("distance matrix is worker-count independent") {
  Graph g = random_connected(25, 10, 42);
  DistanceMatrix serial(g, 1), parallel(g, 4);
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y = 0; y < g.vertex_count(); ++y) REQUIRE(serial(x, y) == parallel(x, y));
}

TEST_CASE("delta intervals") {
  Graph c6 = cycle(6);
  DistanceMatrix dm(c6);
  CHECK(delta_interval(dm, {0, 2, 0}) == std::vector<int>{0, 1, 2});
  // two geodesics between antipodes cover the whole cycle
  CHECK(delta_interval(dm, {0, 3, 0}) == std::vector<int>{0, 1, 2, 3, 4, 5});
  // widening delta only grows the interval
  auto tight = delta_interval(dm, {0, 2, 0});
  auto loose = delta_interval(dm, {0, 2, 2});
  CHECK(std::includes(loose.begin(), loose.end(), tight.begin(), tight.end()));
}

TEST_CASE("l1 product distances add coordinatewise") {
  Graph p3 = path(3), p4 = path(4);
  Graph prod = l1_product(p3, p4);
  CHECK(prod.vertex_count() == 12);
  DistanceMatrix dm(prod);
  DistanceMatrix d3(p3), d4(p4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 4; ++l)
          REQUIRE(dm(i * 4 + j, k * 4 + l) == d3(i, k) + d4(j, l));

  Caps tiny;
  tiny.vertex_cap = 8;
  CHECK_THROWS_AS(l1_product(p3, p4, tiny), Error);
}

TEST_CASE("generators have the expected shapes") {
  CHECK(hypercube(4).vertex_count() == 16);
  CHECK(hypercube(4).edge_count() == 32);
  CHECK(grid(3, 3).edge_count() == 12);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(6).edge_count() == 6);
  Graph t = random_tree(20, 7);
  CHECK(t.vertex_count() == 20);
  CHECK(t.edge_count() == 19);
  // same seed, same tree
  CHECK(serialize(random_tree(20, 7), GraphFormat::EdgeList) ==
        serialize(t, GraphFormat::EdgeList));

  Graph q = quasi_line(2, 0, 10);
  DistanceMatrix dm(q);
  CHECK(dm(0, 10) == 5);   // ceil(10/2)
  CHECK(dm(0, 3) == 2);    // ceil(3/2)
  CHECK(q.adjacent(0, 2));
  CHECK(!q.adjacent(0, 3));
}

TEST_CASE("serialization round trips") {
  Graph g = grid(2, 3);
  g.name = "grid-2x3";

  Graph from_edges = parse_graph(serialize(g, GraphFormat::EdgeList));
  CHECK(from_edges.vertex_count() == g.vertex_count());
  CHECK(from_edges.edges() == g.edges());

  Graph from_json = parse_graph(serialize(g, GraphFormat::Json));
  CHECK(from_json.vertex_count() == g.vertex_count());
  CHECK(from_json.edges() == g.edges());
  CHECK(from_json.name == "grid-2x3");

  CHECK(serialize(g, GraphFormat::Dot).find("--") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_edge_list("n 4\n0 1\n2 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("{\"vertices\": oops}"), Error);
}

TEST_CASE("small isomorphism checker") {
  CHECK(isomorphic_small(cycle(4), hypercube(2)));
  CHECK(!isomorphic_small(path(4), cycle(4)));
}
