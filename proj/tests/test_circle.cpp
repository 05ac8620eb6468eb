#include <random>

#include "doctest.h"
#include "medianlab/circle.hpp"
#include "medianlab/error.hpp"

using namespace medianlab;

namespace {

Dyadic half() { return Dyadic(BigInt(1), 1); }

// slope 1/2 on [0, 1/2], 1 on [1/2, 3/4], 2 on [3/4, 1]; fixes 0 with
// derivative 1/2 there, hence infinite order
CircleMap contraction() {
  return CircleMap({Dyadic(0), half(), Dyadic(BigInt(3), 2), Dyadic(1)},
                   {Dyadic(0), Dyadic(BigInt(1), 2), half(), Dyadic(1)});
}

}  // namespace

TEST_CASE("half rotation squares to the identity") {
  CircleMap r = CircleMap::rotation(half());
  CHECK(!r.is_identity());
  CHECK(CircleMap::compose(r, r).is_identity());
  CHECK(r.inverse() == r);
  CHECK(euler_value(r, r) == 1);
  CHECK(euler_value(r, CircleMap::identity()) == 0);
  CHECK(euler_value(CircleMap::identity(), r) == 0);
}

TEST_CASE("quarter rotation has order four") {
  CircleMap q = CircleMap::rotation(Dyadic(BigInt(1), 2));
  CircleMap acc = q;
  int order = 1;
  while (!acc.is_identity()) {
    acc = CircleMap::compose(acc, q);
    ++order;
    REQUIRE(order <= 8);
  }
  CHECK(order == 4);
}

TEST_CASE("the contraction map has infinite order") {
  CircleMap f = contraction();
  CircleMap acc = f;
  for (int i = 1; i <= 64; ++i) {
    REQUIRE(!acc.is_identity());
    acc = CircleMap::compose(acc, f);
  }
  // its lift moves 1/2 toward 0 exponentially: f^k(1/2) = 1/2^{k+1}
  CHECK(f.eval_lift(half()) == Dyadic(BigInt(1), 2));
  CHECK(CircleMap::compose(f, f).eval_lift(half()) == Dyadic(BigInt(1), 3));
}

TEST_CASE("composition and inverse close over random elements") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    CircleMap f = CircleMap::random(rng, 4);
    CircleMap g = CircleMap::random(rng, 4);
    CHECK(CircleMap::compose(f, f.inverse()).is_identity());
    CHECK(CircleMap::compose(f.inverse(), f).is_identity());
    // associativity through a third element
    CircleMap h = CircleMap::random(rng, 3);
    CHECK(CircleMap::compose(CircleMap::compose(f, g), h) ==
          CircleMap::compose(f, CircleMap::compose(g, h)));
  }
}

TEST_CASE("lifts commute with integer translation") {
  std::mt19937_64 rng(32);
  CircleMap f = CircleMap::random(rng, 5);
  LineMap lf = lift(f);
  for (int k = -64; k <= 64; ++k) {
    Dyadic x(BigInt(k), 6);  // k / 2^6
    REQUIRE(lf.eval(x + Dyadic(1)) == lf.eval(x) + Dyadic(1));
  }
  // strict monotonicity on the same mesh
  Dyadic prev = lf.eval(Dyadic(BigInt(-64), 6));
  for (int k = -63; k <= 64; ++k) {
    Dyadic cur = lf.eval(Dyadic(BigInt(k), 6));
    REQUIRE(prev < cur);
    prev = cur;
  }
}

TEST_CASE("the lift of the half rotation squares to the unit translation") {
  LineMap l = lift(CircleMap::rotation(half()));
  CHECK(LineMap::compose(l, l) == LineMap::translation(1));
  CHECK(LineMap::compose(l.inverse(), l) == LineMap::identity());
  // tau is central among lifts
  std::mt19937_64 rng(33);
  LineMap tau = LineMap::translation(1);
  for (int i = 0; i < 40; ++i) {
    LineMap m(CircleMap::random(rng, 4), 0);
    REQUIRE(LineMap::compose(tau, m) == LineMap::compose(m, tau));
  }
}

TEST_CASE("JSON serialization round trips") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 25; ++i) {
    CircleMap f = CircleMap::random(rng, 4);
    CHECK(CircleMap::from_json(f.to_json()) == f);
    LineMap m(f, static_cast<long long>(i) - 12);
    CHECK(LineMap::from_json(m.to_json()) == m);
  }
  CHECK_THROWS_AS(CircleMap::from_json("{\"bp\": 3}"), Error);
}

TEST_CASE("group wrappers parse their text formats") {
  TGroup t;
  Element r = t.parse("rot:1/2");
  CHECK(t.mul(r, r) == t.identity());
  CHECK(*order_of(t, r, 5) == 2);
  CHECK(t.parse("id") == t.identity());
  CHECK(t.parse(r.str()) == r);  // JSON round trip through str()
  CHECK(!t.enumerable());
  CHECK_THROWS_AS(enumerate_ball(t, 2), Error);
  try {
    t.parse("rot:1/3");
    FAIL("expected NonDyadicInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonDyadicInput);
  }

  TBarGroup tbar;
  Element tau = tbar.generator_by_name("tau");
  CHECK(tbar.parse("tau") == tau);
  Element l = tbar.parse("lift:rot:1/2");
  CHECK(tbar.mul(l, l) == tau);
  CHECK(tbar.parse(l.str()) == l);
  CHECK(!order_of(tbar, tau, 20).has_value());
}

TEST_CASE("invalid circle maps are rejected") {
  // slope 3/4 is not a power of two
  CHECK_THROWS_AS(CircleMap({Dyadic(0), half(), Dyadic(1)},
                            {Dyadic(0), Dyadic(BigInt(1), 2), Dyadic(1)}),
                  Error);
  // images must increase
  CHECK_THROWS_AS(CircleMap({Dyadic(0), half(), Dyadic(1)},
                            {half(), Dyadic(BigInt(1), 2), half() + Dyadic(1)}),
                  Error);
  // normalization F(0) in [0,1)
  CHECK_THROWS_AS(CircleMap({Dyadic(0), Dyadic(1)}, {Dyadic(2), Dyadic(3)}), Error);
}
