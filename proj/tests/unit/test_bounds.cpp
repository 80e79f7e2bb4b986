#include "blockpoly/bounds.hpp"

#include "blockpoly/triangle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace blockpoly;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("Samuelson interval") {
    const SamuelsonInterval s = samuelson_interval(ip({-1, 0, 1}));
    CHECK(s.x_minus == -1.0);
    CHECK(s.x_plus == 1.0);
    // 2x^2 - 6x + 4 = 2(x-1)(x-2): monic a1 = -3, a2 = 2
    const SamuelsonInterval t = samuelson_interval(ip({4, -6, 2}));
    CHECK(t.a1 == -3);
    CHECK(t.a2 == 2);
    CHECK(t.x_minus == 1.0);
    CHECK(t.x_plus == 2.0);
    CHECK_THROWS_AS(samuelson_interval(ip({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(samuelson_interval(ip({0, 0, 1, 0, 1})), std::logic_error);
  }

  TEST_CASE("leftmost roots against the Samuelson estimate") {
    const Ratio eps = make_ratio(1, 1000000000);
    struct Row {
      std::size_t n;
      double z, x;
    };
    // independent high-precision evaluation
    for (const Row& r : {Row{10, 9.2231796625, 9.2418536608}, Row{11, 2.82809777334, 2.84972906394},
                         Row{100, 11085.4509833, 11160.8362319}, Row{101, 2852.95545134, 2958.05332258}}) {
      const SamuelsonReport s = samuelson_vs_actual(r.n, eps);
      CHECK_MESSAGE(close(std::abs(s.z_star_approx), r.z, 1e-9), "n=", r.n);
      CHECK_MESSAGE(close(std::abs(s.x_minus), r.x, 1e-10), "n=", r.n);
      CHECK(s.coefficient_ratios_ok);
      CHECK(s.dominates);
      CHECK(s.estimate_over_actual >= 1);
    }
  }

  TEST_CASE("domination and tightness for small n") {
    for (std::size_t n = 4; n <= 60; ++n) {
      const SamuelsonReport s = samuelson_vs_actual(n, make_ratio(1, 1000));
      CHECK_MESSAGE(s.dominates, "n=", n);
      CHECK(s.coefficient_ratios_ok);
      if (n % 2 == 0 && n >= 10) CHECK(s.estimate_over_actual <= 1.05);
    }
  }

  TEST_CASE("special values at k = floor(n/2)") {
    CHECK(special_value_max_k(4) == 3);
    CHECK(special_value_max_k(5) == 10);
    CHECK(special_value_max_k(6) == 15);
    for (std::size_t n = 2; n <= 300; ++n) REQUIRE(special_value_max_k(n) == d_count(n, n / 2));
    CHECK_THROWS_AS(special_value_max_k(1), std::invalid_argument);
  }

  TEST_CASE("cubic scaling") {
    CHECK(samuelson_scaling_limit_even() == doctest::Approx(-0.0113402303).epsilon(1e-9));
    CHECK(samuelson_scaling_limit_odd() == doctest::Approx(-0.0029280349).epsilon(1e-9));
    CHECK(samuelson_scaling(200) == doctest::Approx(-0.011251423).epsilon(1e-7));
    CHECK(samuelson_scaling(201) == doctest::Approx(-0.0029003323).epsilon(1e-7));
    CHECK_THROWS_AS(samuelson_scaling(9), std::invalid_argument);
  }

  TEST_CASE("scaling probe") {
    const ScalingProbe one = leftmost_scaling_probe({50}, make_ratio(1, 1000));
    REQUIRE(one.rows.size() == 1);
    REQUIRE(one.fits.size() == 1);
    CHECK_FALSE(one.fits[0].c.has_value());

    const ScalingProbe p = leftmost_scaling_probe({20, 21, 40, 41, 60, 61}, make_ratio(1, 1000000));
    REQUIRE(p.fits.size() == 2);
    CHECK(p.fits[0].even);
    CHECK(p.fits[0].c.has_value());
    CHECK(p.fits[0].residuals.size() == 3);
    std::ostringstream csv;
    write_scaling_csv(csv, p);
    const std::string text = csv.str();
    CHECK(text.rfind("n,parity,x_minus,z_star,ratio\n20,even,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK_THROWS_AS(leftmost_scaling_probe({9}, make_ratio(1, 10)), std::invalid_argument);
  }
}
