#include "blockpoly/polynomials.hpp"

#include <doctest.h>

using namespace blockpoly;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("base polynomials") {
    CHECK(d_poly(4) == ip({0, 1, 3}));
    CHECK(d_poly(5) == ip({0, 1, 10}));
    CHECK(to_string(d_poly(4)) == "3x^2 + x");
    CHECK(to_string(d_poly(6)) == "15x^3 + 25x^2 + x");
    CHECK(d_poly(0) == ip({1}));
    CHECK(d_poly(1).is_zero());
  }

  TEST_CASE("arithmetic") {
    const IntPoly a = ip({1, 2});
    const IntPoly b = ip({-1, 0, 1});
    CHECK(a * b == ip({-1, -2, 1, 2}));
    CHECK(a - a == IntPoly{});
    CHECK((a - a).degree() == -1);
    CHECK(b.derivative() == ip({0, 2}));
    CHECK(a.shifted(2) == ip({0, 0, 1, 2}));
    CHECK(eval_rational(b, make_ratio(1, 2)) == make_ratio(-3, 4));
    CHECK(sign_at(b, make_ratio(1, 2)) == -1);
    CHECK(sign_at(b, Ratio(1)) == 0);
    CHECK(sign_at(b, make_ratio(-7, 3)) == 1);
  }

  TEST_CASE("division, content and gcd") {
    const IntPoly f = ip({-1, 0, 1});  // (x-1)(x+1)
    const IntPoly g = ip({-2, 1, 1});  // (x-1)(x+2)
    CHECK(gcd(f, g) == ip({-1, 1}));
    CHECK(gcd(f * Int(6), g * Int(4)) == ip({-1, 1}));
    CHECK(exact_quotient(f, ip({1, 1})) == ip({-1, 1}));
    CHECK_THROWS_AS(exact_quotient(f, ip({2, 1})), std::domain_error);
    CHECK(content(ip({6, -4, 10})) == 2);
    CHECK(primitive_part(ip({6, -4, 10})) == ip({3, -2, 5}));
    const auto [q, r] = divmod(to_rat(ip({1, 0, 0, 1})), to_rat(ip({1, 1})));
    CHECK(q == to_rat(ip({1, -1, 1})));
    CHECK(r.is_zero());
  }

  TEST_CASE("json round trip keeps exact decimal strings") {
    const IntPoly p = d_poly(60);
    CHECK(int_poly_from_json(to_json(p)) == p);
    CHECK(to_json(ip({0, 1, 3})) == R"(["0","1","3"])");
    CHECK_THROWS_AS(int_poly_from_json("[1,2]"), std::invalid_argument);
  }

  TEST_CASE("functional recurrence") {
    for (std::size_t n = 3; n <= 300; ++n) REQUIRE(check_functional_recurrence(n));
    CHECK_THROWS_AS(check_functional_recurrence(2), std::invalid_argument);
  }

  TEST_CASE("cycle polynomial is the rising factorial") {
    for (std::size_t n = 0; n <= 15; ++n) CHECK(c_poly(n) == row_poly(triangle_row(TriangleKind::c(), n)));
  }

  TEST_CASE("generating polynomials of the other triangles") {
    CHECK(s_poly(3) == ip({0, 1, 3, 1}));
    CHECK(dr_poly(5, 1) == ip({0, 24, 20}));
  }
}
