#include "doctest.h"

#include "massform/rational.hpp"

using massform::BigInt;
using massform::Rational;

TEST_CASE("rationals normalize to reduced form with positive denominator") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
  CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("field operations are exact") {
  Rational a(BigInt(1), BigInt(3));
  Rational b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(BigInt(-1), BigInt(3)));
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

  // accumulating thirds never drifts
  Rational sum;
  for (int i = 0; i < 3000; ++i) sum += a;
  CHECK(sum == Rational(1000));
}

TEST_CASE("comparisons cross-multiply") {
  CHECK(Rational(BigInt(2), BigInt(3)) < Rational(BigInt(3), BigInt(4)));
  CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
  CHECK(Rational(BigInt(7), BigInt(7)) == Rational(1));
  CHECK(Rational(BigInt(5), BigInt(4)) >= Rational(BigInt(5), BigInt(4)));
}

TEST_CASE("powers allow negative exponents") {
  CHECK(Rational::pow(Rational(3), 4) == Rational(81));
  CHECK(Rational::pow(Rational(3), -2) == Rational(BigInt(1), BigInt(9)));
  CHECK(Rational::pow(Rational(BigInt(2), BigInt(3)), -3) == Rational(BigInt(27), BigInt(8)));
  CHECK(Rational::pow(Rational(5), 0) == Rational(1));
  CHECK(massform::pow_int(BigInt(2), 70) ==
        Rational(BigInt("1180591620717411303424")));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::invalid_argument);
}

TEST_CASE("string renderings") {
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(3).to_fraction_string() == "3/1");
  CHECK(Rational(BigInt(9), BigInt(20)).to_string() == "9/20");

  SUBCASE("decimal rounds half away from zero and trims") {
    CHECK(Rational(BigInt(9), BigInt(20)).to_decimal_string(6) == "0.45");
    CHECK(Rational(BigInt(8), BigInt(3)).to_decimal_string(6) == "2.666667");
    CHECK(Rational(BigInt(1), BigInt(3)).to_decimal_string(6) == "0.333333");
    CHECK(Rational(BigInt(1), BigInt(2)).to_decimal_string(0) == "1");
    CHECK(Rational(BigInt(-1), BigInt(2)).to_decimal_string(0) == "-1");
    CHECK(Rational(BigInt(-8), BigInt(3)).to_decimal_string(3) == "-2.667");
    CHECK(Rational(3).to_decimal_string(6) == "3");
    CHECK(Rational(BigInt(1), BigInt(8)).to_decimal_string(6, /*trim=*/false) == "0.125000");
    // carries across the point
    CHECK(Rational(BigInt(999999999), BigInt(1000000000)).to_decimal_string(6) == "1");
  }
}
