#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oils/interval.hpp"
#include "support/rational_oracle.hpp"
#include "support/test_rng.hpp"

using oils::Interval;
using oils::extended_divide;
using oils::hull;
using oils::intersect;

TEST_CASE("addition on exact endpoints stays exact") {
  CHECK(Interval(1, 2) + Interval(3, 4) == Interval(4, 6));
  CHECK(Interval(0, 0) + Interval(-3.5, 7.25) == Interval(-3.5, 7.25));
}

TEST_CASE("inexact addition widens outward and keeps the true value") {
  const Interval s = Interval(0.1) + Interval(0.2);
  CHECK(s.lo() < s.hi());
  const auto exact = oracle::exact_add(oracle::exact(Interval(0.1)), oracle::exact(Interval(0.2)));
  CHECK(oracle::encloses(s, exact));
  CHECK(oracle::within_one_ulp(s, exact));
  CHECK(exact.lo == oracle::to_rational(0.1) + oracle::to_rational(0.2));
}

TEST_CASE("multiplication endpoint cases") {
  CHECK(Interval(-1, 2) * Interval(3, 4) == Interval(-4, 8));
  CHECK(Interval(1, 1) * Interval(-2.5, 4) == Interval(-2.5, 4));
  CHECK(Interval(-2, -1) * Interval(-3, -2) == Interval(2, 6));
}

TEST_CASE("division endpoint cases") {
  CHECK(*oils::divide(Interval(1, 2), Interval(2, 4)) == Interval(0.25, 1));
  CHECK(*oils::divide(Interval(-3, 5), Interval(1, 1)) == Interval(-3, 5));
  CHECK_FALSE(oils::divide(Interval(1, 2), Interval(-1, 1)).has_value());
}

TEST_CASE("intersection") {
  CHECK(intersect(Interval(1, 3), Interval(2, 5)) == Interval(2, 3));
  CHECK(intersect(Interval(1, 2), Interval(3, 4)).is_empty());
  CHECK(intersect(Interval(1, 2), Interval(1, 2)) == Interval(1, 2));
  CHECK(intersect(Interval::empty(), Interval(0, 1)).is_empty());
}

TEST_CASE("structural operations") {
  CHECK(Interval(0.5, 1.5).width() == 1.0);
  CHECK(Interval(-3, 2).mag() == 3.0);
  CHECK(Interval::from_mid_rad(1.0, 0.5) == Interval(0.5, 1.5));
  CHECK(Interval(2, 6).mid() == 4.0);
  CHECK(Interval(-4, -2).mig() == 2.0);
  CHECK(Interval(-1, 2).mig() == 0.0);
}

TEST_CASE("mid/rad round trip re-covers the interval") {
  testrng::Rng rng(11);
  for (int k = 0; k < 20000; ++k) {
    const Interval x = rng.interval(1e6);
    const Interval back = Interval::from_mid_rad(x.mid(), x.rad());
    CHECK(back.contains(x));
  }
}

TEST_CASE("empty interval arises from intersection only") {
  const Interval e = Interval::empty();
  CHECK(e.is_empty());
  CHECK(Interval(0, 1).contains(e));
}

TEST_CASE("inclusion monotonicity of add and mul") {
  testrng::Rng rng(17);
  for (int k = 0; k < 20000; ++k) {
    const Interval a_outer = rng.interval();
    const Interval b_outer = rng.interval();
    const Interval a = rng.inside(a_outer);
    const Interval b = rng.inside(b_outer);
    CHECK((a_outer + b_outer).contains(a + b));
    CHECK((a_outer * b_outer).contains(a * b));
  }
}

TEST_CASE("containment soundness of sampled point operations") {
  testrng::Rng rng(23);
  int divisions = 0;
  for (int k = 0; k < 20000; ++k) {
    const Interval a = rng.interval();
    const Interval b = rng.interval();
    const double x = rng.point_in(a);
    const double y = rng.point_in(b);
    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    if (!b.contains(0.0)) {
      CHECK(oils::divide(a, b)->contains(x / y));
      ++divisions;
    }
  }
  CHECK(divisions > 1000);
}

TEST_CASE("kernels match the rational oracle to one ulp") {
  testrng::Rng rng(31);
  for (int k = 0; k < 20000; ++k) {
    const Interval a = rng.interval(50.0);
    const Interval b = rng.interval(50.0);
    const auto ra = oracle::exact(a);
    const auto rb = oracle::exact(b);

    const Interval s = a + b;
    CHECK(oracle::encloses(s, oracle::exact_add(ra, rb)));
    CHECK(oracle::within_one_ulp(s, oracle::exact_add(ra, rb)));

    const Interval d = a - b;
    CHECK(oracle::encloses(d, oracle::exact_sub(ra, rb)));
    CHECK(oracle::within_one_ulp(d, oracle::exact_sub(ra, rb)));

    const Interval p = a * b;
    CHECK(oracle::encloses(p, oracle::exact_mul(ra, rb)));
    CHECK(oracle::within_one_ulp(p, oracle::exact_mul(ra, rb)));

    if (!b.contains(0.0)) {
      const Interval q = *oils::divide(a, b);
      CHECK(oracle::encloses(q, oracle::exact_div(ra, rb)));
      CHECK(oracle::within_one_ulp(q, oracle::exact_div(ra, rb)));
    }
  }
}

TEST_CASE("arithmetic with infinite endpoints follows extended reals") {
  const Interval ray(1.0, oils::rnd::kInf);
  CHECK((ray + Interval(1, 2)).hi() == oils::rnd::kInf);
  CHECK((ray + Interval(1, 2)).lo() == 2.0);
  const Interval prod = Interval(0, 1) * ray;
  CHECK(prod.lo() == 0.0);
  CHECK(prod.hi() == oils::rnd::kInf);
}

TEST_CASE("extended division case table") {
  // divisor straddles zero, positive numerator: two rays
  const auto two = extended_divide(Interval(1, 2), Interval(-1, 1));
  REQUIRE(two.count == 2);
  CHECK(two.part[0].lo() == -oils::rnd::kInf);
  CHECK(two.part[0].hi() == -1.0);
  CHECK(two.part[1].lo() == 1.0);
  CHECK(two.part[1].hi() == oils::rnd::kInf);

  // divisor [0, d], positive numerator: single right ray
  const auto ray = extended_divide(Interval(1, 1), Interval(0, 1));
  REQUIRE(ray.count == 1);
  CHECK(ray.part[0] == Interval(1.0, oils::rnd::kInf));

  // numerator contains zero: everything
  const auto all = extended_divide(Interval(-1, 1), Interval(-1, 1));
  REQUIRE(all.count == 1);
  CHECK(all.part[0] == Interval::whole_line());

  // divisor exactly zero, numerator misses zero: empty
  CHECK(extended_divide(Interval(1, 2), Interval(0, 0)).count == 0);
}

TEST_CASE("extended division agrees with the solution-set semantics") {
  testrng::Rng rng(41);
  for (int k = 0; k < 5000; ++k) {
    Interval den = rng.interval(4.0);
    if (!den.contains(0.0)) den = hull(den, Interval(0.0));
    const Interval num = rng.interval(4.0);
    const auto pieces = extended_divide(num, den);
    for (int s = 0; s < 40; ++s) {
      const double x = rng.uniform(-20, 20);
      // x solves den * x = num for some instance iff x*den meets num
      const Interval image = Interval(x) * den;
      const bool solvable = !intersect(image, num).is_empty();
      bool in_pieces = false;
      for (int i = 0; i < pieces.count; ++i) in_pieces |= pieces.part[i].contains(x);
      if (solvable) CHECK(in_pieces);
      // outward rounding may only add a sliver around the boundary
      if (in_pieces && !solvable) {
        const Interval nudged = Interval(x) * hull(den, den + Interval(-1e-9, 1e-9));
        CHECK(!intersect(nudged, num + Interval(-1e-9, 1e-9)).is_empty());
      }
    }
  }
}
