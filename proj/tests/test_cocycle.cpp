#include <random>

#include "doctest.h"
#include "medianlab/circle.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/group.hpp"

using namespace medianlab;

TEST_CASE("every registered cocycle satisfies the identity") {
  for (const std::string& name : {"trivial", "trivial:free:2", "heisenberg", "euler:T",
                                  "twist:I={}", "twist:I={1,3}", "twist:I=all"}) {
    Cocycle c = make_cocycle(name);
    CocycleCheckReport r = check_cocycle(c, 300, 97);
    INFO("cocycle ", name);
    CHECK(r.pass);
    CHECK(r.bound_ok);
    CHECK(r.samples >= 300);
    CHECK(r.witness.empty());
  }
  CHECK(make_cocycle("twist:I={1}").characteristic == 2);
  CHECK(make_cocycle("heisenberg").characteristic == 0);
  CHECK_THROWS_AS(make_cocycle("nosuch"), Error);
}

TEST_CASE("check is deterministic for a fixed seed") {
  Cocycle c = make_cocycle("euler:T");
  CocycleCheckReport a = check_cocycle(c, 120, 5);
  CocycleCheckReport b = check_cocycle(c, 120, 5);
  CHECK(a.samples == b.samples);
  CHECK(a.max_abs == b.max_abs);
  CHECK(a.pass == b.pass);
}

TEST_CASE("the corrupted control cocycle is caught with a witness") {
  Cocycle c = make_cocycle("corrupted");
  CocycleCheckReport r = check_cocycle(c, 500, 1);
  CHECK(!r.pass);
  REQUIRE(r.witness.size() == 3);
  CHECK(r.violation != 0);

  // the extension constructor runs the same validation
  try {
    ExtensionGroup ext(make_cocycle("corrupted"));
    FAIL("expected CocycleInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CocycleInvalid);
  }
}

TEST_CASE("extension axioms and the central generator") {
  ExtensionGroup ext(make_cocycle("heisenberg"));
  Element z = ext.generator_by_name("z");
  CHECK(ext.phi(z) == 1);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    Element a = ext.random_element(rng, 5);
    Element b = ext.random_element(rng, 5);
    Element c = ext.random_element(rng, 5);
    REQUIRE(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
    REQUIRE(ext.mul(a, ext.inv(a)) == ext.identity());
    REQUIRE(ext.mul(z, a) == ext.mul(a, z));
  }
}

TEST_CASE("phi telescopes along powers") {
  ExtensionGroup ext(make_cocycle("heisenberg"));
  const Cocycle& c = ext.cocycle();
  Element e = ext.parse("z^2 | (1,1)");
  CHECK(ext.phi(e) == 2);
  Element acc = e;
  long long expected = ext.phi(e);
  for (int k = 2; k <= 20; ++k) {
    expected += ext.phi(e) + c.value(acc.as<ExtensionElement>().q(), e.as<ExtensionElement>().q());
    acc = ext.mul(acc, e);
    REQUIRE(ext.phi(acc) == expected);
  }
  TranslationReport t = translation_number(ext, e, 20);
  CHECK(t.phi_n == expected);
  CHECK(t.value == Rational(expected, 20));
}

TEST_CASE("a trivial cocycle makes phi a homomorphism") {
  ExtensionGroup ext(make_cocycle("trivial"));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    Element a = ext.random_element(rng, 6);
    Element b = ext.random_element(rng, 6);
    REQUIRE(ext.phi(ext.mul(a, b)) == ext.phi(a) + ext.phi(b));
  }
  Element e = ext.parse("z^3 | (2,-1)");
  TranslationReport t = translation_number(ext, e, 1);
  CHECK(t.value == Rational(3));
  CHECK(translation_number(ext, e, 10).value == Rational(3));  // exact for homomorphisms
  DefectReport d = defect_over_ball(ext, 2);
  CHECK(d.defect == 0);
  CHECK(d.max_abs_cocycle == 0);
}

TEST_CASE("euler cocycle values stay in {0,1}") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    CircleMap f = CircleMap::random(rng, 3);
    CircleMap g = CircleMap::random(rng, 3);
    int v = euler_value(f, g);
    REQUIRE(v >= 0);
    REQUIRE(v <= 1);
  }
}

TEST_CASE("defect over a ball equals the largest cocycle value there") {
  ExtensionGroup ext(make_cocycle("heisenberg"));
  DefectReport d = defect_over_ball(ext, 2);
  CHECK(d.pairs == 13 * 13);
  // phi((0,q1)(0,q2)) - 0 - 0 = c(q1, q2), so the two maxima coincide
  CHECK(d.defect == d.max_abs_cocycle);
  CHECK(d.defect == 4);  // attained at q1 = (2,0), q2 = (0,2)
  REQUIRE(d.witness.size() == 2);

  // the sampled variant works on non-enumerable bases and respects the bound
  ExtensionGroup euler(make_cocycle("euler:T"));
  DefectReport ds = defect_sampled(euler, 200, 7);
  CHECK(ds.pairs == 199);
  CHECK(ds.defect <= 1);
  CHECK(ds.max_abs_cocycle <= 1);
}

TEST_CASE("rotation number of the half rotation") {
  ExtensionGroup ext(make_cocycle("euler:T"));
  Element e = ext.make(0, ext.base().parse("rot:1/2"));
  TranslationReport t = translation_number(ext, e, 64, 1);
  CHECK(t.value == Rational(1, 2));
  CHECK(t.phi_n == 32);
  REQUIRE(t.half_width.has_value());
  CHECK(*t.half_width == Rational(1, 64));

  // a quarter rotation spins at 1/4
  Element q = ext.make(0, ext.base().parse("rot:1/4"));
  CHECK(translation_number(ext, q, 64).value == Rational(1, 4));
  // a lift started with nonzero phi drifts by exactly that amount
  Element shifted = ext.make(1, ext.base().parse("rot:1/2"));
  CHECK(translation_number(ext, shifted, 64).value == Rational(3, 2));

  CHECK_THROWS_AS(translation_number(ext, e, 0), Error);
}

TEST_CASE("twist extensions reduce the fiber mod two") {
  ExtensionGroup ext(make_cocycle("twist:I={}"));
  Element z = ext.generator_by_name("z");
  CHECK(ext.mul(z, z) == ext.identity());
  CHECK(ext.phi(ext.make(3, ext.base().identity())) == 1);
  // the twisted commutator lands on z (beta(1) = 1 when 1 is missing from I)
  Element w = ext.evaluate_word("t a T a t a T a");
  CHECK(w == z);
}
