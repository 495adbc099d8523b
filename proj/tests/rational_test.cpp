#include "doctest.h"
#include "overhang/rational.hpp"

using namespace overhang;

TEST_CASE("decimal round trips through rationals") {
  auto r = rational_from_decimal(0.5);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(1, 2));

  r = rational_from_decimal(-2.375);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(-19, 8));

  // 0.1 is not representable in binary, but its double rounds back to the
  // decimal 0.1, so the reconstruction is accepted.
  r = rational_from_decimal(0.1);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(1, 10));
}

TEST_CASE("decimal reconstruction rejects values needing >12 digits") {
  CHECK_FALSE(rational_from_decimal(1.0 / 3.0).has_value());
  CHECK_FALSE(rational_from_decimal(0.1234567890123456).has_value());
}

TEST_CASE("decimal_string prints terminating expansions only") {
  CHECK(decimal_string(Rational(3, 8)) == "0.375");
  CHECK(decimal_string(Rational(-19, 8)) == "-2.375");
  CHECK(decimal_string(Rational(5, 1)) == "5");
  CHECK(decimal_string(Rational(1, 10)) == "0.1");
  CHECK_FALSE(decimal_string(Rational(1, 3)).has_value());
  CHECK_FALSE(decimal_string(Rational(1, 1'000'000'000'000'0)).has_value());
}

TEST_CASE("double_string is shortest round-trip form") {
  CHECK(double_string(0.1) == "0.1");
  CHECK(double_string(1.0) == "1");
  CHECK(double_string(-2.5) == "-2.5");
}

TEST_CASE("rational_floor matches mathematical floor") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(6, 2)) == 3);
  CHECK(rational_floor(Rational(0)) == 0);
}

TEST_CASE("to_double on large rationals") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(10'000'000'000'000'000, 3)) ==
        doctest::Approx(3.3333333333333332e15));
}
