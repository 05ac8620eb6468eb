#include "doctest.h"
#include "medianlab/dyadic.hpp"
#include "medianlab/error.hpp"

using namespace medianlab;

TEST_CASE("dyadic normalization keeps the numerator odd or zero") {
  Dyadic d(BigInt(6), 1);  // 6/2 = 3
  CHECK(d.num() == 3);
  CHECK(d.exp() == 0);
  CHECK(d.is_integer());

  Dyadic half(BigInt(1), 1);
  CHECK(half.num() == 1);
  CHECK(half.exp() == 1);
  CHECK(!half.is_integer());

  Dyadic zero(BigInt(0), 7);
  CHECK(zero.is_zero());
  CHECK(zero.exp() == 0);
}

TEST_CASE("dyadic arithmetic is exact") {
  Dyadic half(BigInt(1), 1), quarter(BigInt(1), 2);
  CHECK(half + quarter == Dyadic(BigInt(3), 2));
  CHECK(half - half == Dyadic());
  CHECK(half * quarter == Dyadic(BigInt(1), 3));
  CHECK(quarter.mul_pow2(2) == Dyadic(BigInt(1), 0));
  CHECK(-half == Dyadic(BigInt(-1), 1));
  CHECK(quarter < half);
}

TEST_CASE("floor and fractional part split") {
  Dyadic d(BigInt(-3), 1);  // -3/2
  CHECK(d.floor() == -2);
  CHECK(d.frac() == Dyadic(BigInt(1), 1));
  Dyadic e(BigInt(5), 1);  // 5/2
  CHECK(e.floor() == 2);
  CHECK(e.frac() == Dyadic(BigInt(1), 1));
  CHECK(Dyadic(BigInt(4), 0).floor() == 4);
}

TEST_CASE("string form is numerator/2^exp") {
  CHECK(Dyadic(BigInt(3), 2).str() == "3/2^2");
  CHECK(Dyadic(BigInt(5), 0).str() == "5");
  CHECK(Dyadic().str() == "0");
}

TEST_CASE("rational conversion round trips") {
  Dyadic d(BigInt(7), 3);
  Rational r = d.to_rational();
  CHECK(boost::multiprecision::numerator(r) == 7);
  CHECK(boost::multiprecision::denominator(r) == 8);
}
