#include <doctest.h>

#include "rellich/errors.hpp"
#include "rellich/rational.hpp"

using rellich::parse_rational;
using rellich::Rational;

TEST_SUITE("rational") {
  TEST_CASE("decimal and fraction parsing is exact") {
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(parse_rational(" 3 ") == Rational(3));
    CHECK(parse_rational("1e3") == Rational(1000));
    CHECK(parse_rational("+.5") == Rational(1, 2));
  }

  TEST_CASE("leading zeros are decimal, not octal") {
    CHECK(parse_rational("025") == Rational(25));
    CHECK(parse_rational("0.0625") == Rational(1, 16));
    CHECK(parse_rational("010/08") == Rational(5, 4));
  }

  TEST_CASE("malformed input throws") {
    for (const char* bad : {"", "abc", "1.2.3", "1/0", "1e", "--1", "1/2/3", "0x10"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), rellich::InvalidArgument);
    }
  }

  TEST_CASE("doubles convert exactly") {
    CHECK(rellich::to_rational(0.5) == Rational(1, 2));
    CHECK(rellich::to_rational(-3.0) == Rational(-3));
    CHECK(rellich::to_rational(0.1) != Rational(1, 10));
    CHECK(rellich::to_double(rellich::to_rational(0.1)) == 0.1);
    CHECK(rellich::to_double(rellich::to_rational(-1e-300)) == -1e-300);
  }

  TEST_CASE("string form") {
    CHECK(rellich::to_string(Rational(25, 36)) == "25/36");
    CHECK(rellich::to_string(Rational(3)) == "3");
    CHECK(rellich::to_string(Rational(-1, 2)) == "-1/2");
  }
}
