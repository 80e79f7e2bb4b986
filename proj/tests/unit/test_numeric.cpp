#include "blockpoly/numeric.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace blockpoly;

TEST_SUITE("numeric") {
  TEST_CASE("ratios stay in lowest terms") {
    CHECK(make_ratio(6, 4) == make_ratio(3, 2));
    CHECK(make_ratio(Int(-6), Int(-4)) == make_ratio(3, 2));
    CHECK(make_ratio(3, -6).get_den() == 2);
    CHECK_THROWS_AS(make_ratio(1, 0), std::invalid_argument);
  }

  TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Int("2432902008176640000"));
  }

  TEST_CASE("parse_ratio accepts fractions, decimals and exponents") {
    CHECK(parse_ratio("3/4") == make_ratio(3, 4));
    CHECK(parse_ratio("-3/4") == make_ratio(-3, 4));
    CHECK(parse_ratio("0.125") == make_ratio(1, 8));
    CHECK(parse_ratio("1e-3") == make_ratio(1, 1000));
    CHECK(parse_ratio("2.5E2") == 250);
    CHECK(parse_ratio("7") == 7);
    CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratio(""), std::invalid_argument);
  }

  TEST_CASE("parse_int") {
    CHECK(parse_int("-12345678901234567890") == Int("-12345678901234567890"));
    CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
  }

  TEST_CASE("string and double rendering") {
    CHECK(to_string(make_ratio(-1, 3)) == "-1/3");
    CHECK(to_string(Int(42)) == "42");
    CHECK(to_double(make_ratio(1, 4)) == 0.25);
    CHECK(to_double(make_ratio(1, 3)) == 1.0 / 3.0);
    CHECK(to_double(make_ratio(-2, 3)) == -2.0 / 3.0);
    CHECK(to_double(make_ratio(1, 10)) == 0.1);
    // ties go to even
    CHECK(to_double(Int("9007199254740993")) == 9007199254740992.0);
    CHECK(to_double(Int("9007199254740995")) == 9007199254740996.0);
    CHECK(to_double(make_ratio(Int("9007199254740993") * 3 + 1, Int(3))) == 9007199254740994.0);
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(sign(make_ratio(-1, 2)) == -1);
    CHECK(sign(Int(0)) == 0);
    CHECK(abs(make_ratio(-1, 2)) == make_ratio(1, 2));
  }
}
