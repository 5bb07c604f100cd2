#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockbound/rational.hpp"

using namespace fockbound;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-4).to_string() == "-4");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("overflow is detected, never wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS(big * big);
  // near-boundary values that do fit survive
  CHECK((Rational(INT64_MAX / 2) + Rational(INT64_MAX / 2)).sign() == 1);
}

TEST_CASE("exact scalars normalize square factors out of the radicand") {
  ExactScalar s(Rational(1), 8);  // sqrt(8) = 2 sqrt(2)
  CHECK(s.coeff() == Rational(2));
  CHECK(s.radicand() == 2);
  CHECK(ExactScalar(Rational(1), 9) == ExactScalar(Rational(3)));
  CHECK(ExactScalar(Rational(1), 1) == ExactScalar(Rational(1)));
}

TEST_CASE("scalar products stay closed in r*sqrt(k) form") {
  auto s2 = ExactScalar::sqrt_of(2);
  auto s3 = ExactScalar::sqrt_of(3);
  CHECK(s2 * s2 == ExactScalar(Rational(2)));
  CHECK(s2 * s3 == ExactScalar::sqrt_of(6));
  // sqrt(2)*sqrt(6) = 2 sqrt(3)
  CHECK(s2 * ExactScalar::sqrt_of(6) == ExactScalar(Rational(2), 3));
  CHECK((ExactScalar(Rational(3, 2), 2)).square() == Rational(9, 2));
}

TEST_CASE("sums are defined exactly when radicands match") {
  auto s2 = ExactScalar::sqrt_of(2);
  auto sum = s2.try_add(ExactScalar(Rational(2), 2));
  REQUIRE(sum.has_value());
  CHECK(*sum == ExactScalar(Rational(3), 2));
  CHECK_FALSE(s2.try_add(ExactScalar::sqrt_of(3)).has_value());
  auto with_zero = s2.try_add(ExactScalar(Rational(0)));
  REQUIRE(with_zero.has_value());
  CHECK(*with_zero == s2);
  auto cancel = s2.try_add(-s2);
  REQUIRE(cancel.has_value());
  CHECK(cancel->is_zero());
  CHECK(cancel->radicand() == 1);
}

TEST_CASE("scalar text form uses the p/q*sqrt(k) grammar") {
  CHECK(ExactScalar(Rational(3, 2), 2).to_string() == "3/2*sqrt(2)");
  CHECK(ExactScalar(Rational(-1)).to_string() == "-1");
  CHECK(ExactScalar(Rational(2), 3).to_string() == "2*sqrt(3)");
}
