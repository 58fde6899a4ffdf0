#include <doctest.h>

#include "latpack/rational.hpp"

using latpack::BigInt;
using latpack::Rational;

TEST_CASE("rationals are always reduced with positive denominator") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  Rational b(3, -6);
  CHECK(b.num() == -1);
  CHECK(b.den() == 2);
  Rational c(-5, -10);
  CHECK(c.num() == 1);
  CHECK(c.den() == 2);
  CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("arithmetic stays exact and reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK((a / b).den() == 1);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("str round-trips through parse") {
  for (long n = -6; n <= 6; ++n)
    for (long d = 1; d <= 5; ++d) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
  CHECK(Rational(22, 7).str() == "22/7");
}

TEST_CASE("comparisons and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(latpack::abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
  CHECK(latpack::to_bigint(1234567890123456789LL) == BigInt("1234567890123456789"));
}
