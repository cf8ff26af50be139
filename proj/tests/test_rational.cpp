#include <doctest.h>

#include <limits>

#include "reflexpm/errors.hpp"
#include "reflexpm/rational.hpp"

using reflexpm::Rational;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, -5).den() == 1);
  CHECK(Rational(4, 6).to_string() == "2/3");
  CHECK(Rational(-8, 4).to_string() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), reflexpm::InputError);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK_THROWS_AS(Rational(1) / Rational(0), reflexpm::InputError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse(Rational(-9, 4).to_string()) == Rational(-9, 4));
  CHECK_THROWS_AS(Rational::parse("1/"), reflexpm::InputError);
  CHECK_THROWS_AS(Rational::parse("x"), reflexpm::InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), reflexpm::InputError);
}

TEST_CASE("overflow raises instead of wrapping") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), reflexpm::InternalError);
  CHECK_THROWS_AS(Rational(big) * Rational(2), reflexpm::InternalError);
  CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), reflexpm::InternalError);
  CHECK_THROWS_AS((void)reflexpm::checked_mul(big, 3), reflexpm::InternalError);
  CHECK(Rational(big, 3) * Rational(3) == Rational(big));
}
