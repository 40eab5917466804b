#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toricdef/numeric.hpp"

using namespace toricdef;

TEST_CASE("extended gcd gives Bezout coefficients") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      auto [g, s, t] = extended_gcd(a, b);
      CHECK(g >= 0);
      CHECK(g == s * a + t * b);
      if (a != 0 || b != 0) {
        CHECK(Integer(a) % g == 0);
        CHECK(Integer(b) % g == 0);
      }
    }
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(lattice_vector({2, 3})));
  CHECK_FALSE(is_primitive(lattice_vector({2, 4})));
  CHECK_FALSE(is_primitive(lattice_vector({0, 0})));
  CHECK(is_primitive(weight({0, -1})));
  CHECK(content(lattice_vector({-6, 9, 12})) == 3);

  RatVector v(2);
  v << Rational(1, 3), Rational(-1);
  CHECK(primitive_on_ray(v) == lattice_vector({1, -3}));
}

TEST_CASE("rational helpers") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(is_integer(Rational(4, 2)));
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(parse_rational("-5/10") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
}

TEST_CASE("Bareiss determinant and rank agree with hand values") {
  IntMatrix m(3, 3);
  m << 1, 2, 0, 0, 1, 3, 1, 0, 1;
  CHECK(determinant(m) == 7);
  CHECK(rank(m) == 3);

  IntMatrix singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(determinant(singular) == 0);
  CHECK(rank(singular) == 2);

  RatMatrix q(2, 3);
  q << Rational(1, 2), 1, 0, 1, 2, 0;
  CHECK(rank(q) == 1);
  CHECK(rank(RatMatrix(0, 4)) == 0);
}

TEST_CASE("solve and separating functional") {
  RatMatrix a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  RatVector b(3);
  b << 2, 3, 5;
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK((a * *x - b).isZero());
  CHECK_FALSE(separating_functional(a, b));

  b(2) = 4;
  CHECK_FALSE(solve(a, b));
  auto y = separating_functional(a, b);
  REQUIRE(y);
  CHECK(((*y).transpose() * a).isZero());
  CHECK((*y).dot(b) != 0);
}

TEST_CASE("unimodular inverse") {
  IntMatrix m(2, 2);
  m << 2, 1, 1, 1;
  IntMatrix inv = unimodular_inverse(m);
  CHECK((m * inv) == IntMatrix::Identity(2, 2));
  m << 2, 0, 0, 1;
  CHECK_THROWS_AS(unimodular_inverse(m), Error);
}

TEST_CASE("lexicographic order") {
  LexLess less;
  CHECK(less(weight({-1, 5}), weight({0, -3})));
  CHECK_FALSE(less(weight({0, 1}), weight({0, 1})));
  CHECK(less(weight({0, 1}), weight({0, 2})));
}
