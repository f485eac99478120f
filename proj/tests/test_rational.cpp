#include <doctest.h>

#include <stdexcept>

#include <limits>

#include "rrfair/rational.hpp"

using rrfair::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalisation") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
  CHECK(a > b);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(157, 330).to_decimal(3) == "0.476");
  CHECK(Rational(751, 1512).to_decimal(3) == "0.497");
  CHECK(Rational(1, 2000).to_decimal(3) == "0.001");
  CHECK(Rational(-1, 2000).to_decimal(3) == "-0.001");
  CHECK(Rational(1, 3000).to_decimal(3) == "0.000");
  CHECK(Rational(2).to_decimal(3) == "2.000");
  CHECK(Rational(19, 20).to_decimal(1) == "1.0");
  CHECK(Rational(5, 4).to_decimal(0) == "1");
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

}  // TEST_SUITE
