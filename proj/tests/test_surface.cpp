#include <vector>

#include "doctest.h"
#include "medianlab/error.hpp"
#include "medianlab/group.hpp"
#include "medianlab/surface.hpp"

using namespace medianlab;

TEST_CASE("the defining relator collapses to the identity") {
  SurfaceGroup g(2);
  Element r = g.evaluate_word("a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1");
  CHECK(r == g.identity());
  CHECK(r.str() == "e");
  // same for genus 3
  SurfaceGroup g3(3);
  CHECK(g3.from_word(g3.table().relator()) == g3.identity());
}

TEST_CASE("no short nontrivial word is trivial") {
  SurfaceGroup g(2);
  // every freely reduced word of length 1..4 over the 8 letters
  std::vector<std::vector<int>> words = {{}};
  long long checked = 0;
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int l = -4; l <= 4; ++l) {
        if (l == 0) continue;
        if (!w.empty() && w.back() == -l) continue;
        auto u = w;
        u.push_back(l);
        REQUIRE(g.from_word(u) != g.identity());
        ++checked;
        next.push_back(std::move(u));
      }
    words = std::move(next);
  }
  CHECK(checked == 3200);  // 8 + 8*7 + 8*7^2 + 8*7^3
}

TEST_CASE("ball of radius 2 has free-group size") {
  // relator consequences need length >= 6, so spheres 1 and 2 stay free
  SurfaceGroup g(2);
  CHECK(enumerate_ball(g, 1).size() == 9);
  CHECK(enumerate_ball(g, 2).size() == 65);  // 1 + 8 + 56
}

TEST_CASE("long relator prefixes reduce to the short complement") {
  SurfaceGroup g(2);
  const auto& rel = g.table().relator();
  // prefix of length 5 equals the inverse of the remaining 3 letters
  std::vector<int> prefix(rel.begin(), rel.begin() + 5);
  std::vector<int> rest(rel.begin() + 5, rel.end());
  std::vector<int> rest_inv(rest.rbegin(), rest.rend());
  for (int& l : rest_inv) l = -l;
  Element long_side = g.from_word(prefix);
  Element short_side = g.from_word(rest_inv);
  CHECK(long_side == short_side);
  CHECK(long_side.hash() == short_side.hash());
  CHECK(long_side.as<SurfaceElement>().word().size() == 3);  // stored Dehn-reduced
  CHECK(word_length(g, long_side) == 3);
}

TEST_CASE("equality survives different representatives") {
  SurfaceGroup g(2);
  Element u = g.evaluate_word("a1 b1");
  Element v = g.mul(g.evaluate_word("a1 b1 a2"), g.evaluate_word("A2"));
  CHECK(u == v);
  CHECK(u.hash() == v.hash());
  CHECK(g.mul(u, g.inv(u)) == g.identity());
  CHECK(u != g.evaluate_word("b1 a1"));
}

TEST_CASE("genus is part of the model") {
  SurfaceGroup g2(2), g3(3);
  CHECK(g2.generators().size() == 4);
  CHECK(g3.generators().size() == 6);
  Element x = g2.evaluate_word("a1");
  Element y = g3.evaluate_word("a1");
  CHECK(x != y);  // equals() rejects across genera
  try {
    g2.mul(x, y);
    FAIL("expected ModelMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModelMismatch);
  }
  CHECK_THROWS_AS(SurfaceGroup(1), Error);
}
