#include "blockpoly/real_roots.hpp"

#include <doctest.h>

#include <cmath>

using namespace blockpoly;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

IntPoly from_roots(std::initializer_list<long> roots) {
  IntPoly p = ip({1});
  for (long r : roots) p = p * ip({-r, 1});
  return p;
}

}  // namespace

TEST_SUITE("real_roots") {
  TEST_CASE("Sturm counts are half-open") {
    const IntPoly p = from_roots({-1, 1, 2});
    SturmSequence s(p);
    CHECK(s.squarefree());
    CHECK(s.count_all() == 3);
    CHECK(s.count(Ratio(-1), Ratio(1)) == 1);
    CHECK(s.count(Ratio(-2), Ratio(-1)) == 1);
    CHECK(s.count(Ratio(1), Ratio(2)) == 1);
    CHECK(s.count(make_ratio(-1, 2), make_ratio(1, 2)) == 0);
  }

  TEST_CASE("repeated roots are counted once") {
    SturmSequence s(from_roots({1, 1, -1}));
    CHECK_FALSE(s.squarefree());
    CHECK(s.count_all() == 2);
    CHECK(s.squarefree_part().degree() == 2);
  }

  TEST_CASE("primitive chain matches the rational chain up to positive factors") {
    const IntPoly p = d_poly(12);
    const auto rational = sturm_chain(p);
    const auto integral = primitive_sturm_chain(p);
    REQUIRE(rational.size() == integral.size());
    for (std::size_t i = 0; i < rational.size(); ++i) {
      const Ratio ratio = to_rat(integral[i]).leading() / rational[i].leading();
      CHECK(ratio > 0);
      CHECK(to_rat(integral[i]) == rational[i] * ratio);
    }
  }

  TEST_CASE("count_real_roots nudges endpoints that are roots") {
    const IntPoly p = from_roots({0, 1, 3});
    const RootCount c = count_real_roots(p, Ratio(0), Ratio(1));
    CHECK(c.count == 1);
    CHECK(c.lo_nudged);
    CHECK(c.hi_nudged);
    CHECK(c.hi_used > 1);
    CHECK(c.hi_used < 3);
    CHECK_THROWS_AS(count_real_roots(p, Ratio(1), Ratio(1)), std::invalid_argument);
  }

  TEST_CASE("real-rootedness report") {
    const RealRootedness yes = verify_real_rooted(from_roots({-3, -1, 0}));
    CHECK(yes.all_real);
    CHECK(yes.all_simple == true);
    CHECK(yes.all_nonpositive == true);
    const RealRootedness no = verify_real_rooted(ip({1, 0, 1}));
    CHECK_FALSE(no.all_real);
    CHECK_FALSE(no.all_simple.has_value());
    CHECK(verify_real_rooted(from_roots({2, -1})).all_nonpositive == false);
  }

  TEST_CASE("isolation and refinement") {
    const IntPoly p = ip({0, -2, 0, 1});  // x^3 - 2x
    const auto b = isolate_roots(p);
    REQUIRE(b.size() == 3);
    CHECK(b[0].contains(Ratio(0)) == false);  // sqrt 2 first
    CHECK(b[0].lo >= b[1].hi);
    CHECK(b[1].lo >= b[2].hi);
    const RootBracket fine = refine(b[0], p, make_ratio(1, 1000000));
    CHECK(fine.width() <= make_ratio(1, 1000000));
    CHECK(std::abs(fine.approx() - std::sqrt(2.0)) < 1e-6);
    const RootBracket rel = refine_relative(b[2], p, make_ratio(1, 1000000000));
    CHECK(std::abs(rel.approx() + std::sqrt(2.0)) < 1e-8);
    CHECK_THROWS_AS(isolate_roots(ip({1, 0, 1})), RootIsolationError);
    CHECK_THROWS_AS(isolate_roots(from_roots({1, 1})), RootIsolationError);
  }

  TEST_CASE("Cauchy bound is a power of two above every root") {
    const Ratio b = cauchy_bound(from_roots({-100, 3}));
    CHECK(b > 100);
    CHECK(b.get_den() == 1);
    CHECK(mpz_popcount(b.get_num_mpz_t()) == 1);
  }

  TEST_CASE("D_n root brackets") {
    const auto r6 = d_poly_roots(6);
    REQUIRE(r6.size() == 3);
    CHECK(r6[0].hi == 0);
    CHECK(r6[0].certificate == Certificate::ExactRoot);
    // 15x^2 + 25x + 1 has roots (-25 +- sqrt 565)/30
    CHECK(std::abs(refine(r6[1], d_poly(6), make_ratio(1, 1 << 30)).approx() - (-25 + std::sqrt(565.0)) / 30) < 1e-8);
    CHECK(std::abs(refine(r6[2], d_poly(6), make_ratio(1, 1 << 30)).approx() - (-25 - std::sqrt(565.0)) / 30) < 1e-8);
    for (std::size_t n = 2; n <= 60; ++n) CHECK(d_poly_roots(n).size() == n / 2);
    CHECK(sturm_certify_d_roots(45));
    CHECK_THROWS_AS(d_poly_roots(1), std::invalid_argument);
  }

  TEST_CASE("interlacing") {
    for (std::size_t n = 5; n <= 50; ++n) {
      const InterlacingReport r = verify_interlacing(n);
      CHECK_MESSAGE(r.chain_verified, "n=", n, " ", r.failure);
      CHECK(r.pattern == (n % 2 == 0 ? InterlacingPattern::ExtraLeftmost : InterlacingPattern::SameDegree));
      CHECK(r.degrees.first == n / 2);
    }
    CHECK_THROWS_AS(verify_interlacing(4), std::invalid_argument);
  }

  TEST_CASE("Bernoulli decomposition reconstructs D_n / D_n(1)") {
    const Ratio eps = make_ratio(1, 1L << 40);
    for (std::size_t n = 4; n <= 40; ++n) {
      const auto probs = bernoulli_decomposition_d(n, eps);
      CHECK(probs.size() == n / 2);
      for (const auto& p : probs) {
        CHECK(p.lo > 0);
        CHECK(p.hi <= 1);
      }
      CHECK(bernoulli_reconstructs(d_poly(n), probs));
    }
    // p(x) = (x+1)(x+3)/8: probabilities 1/2 and 1/4
    const auto probs = bernoulli_decomposition(from_roots({-1, -3}), eps);
    REQUIRE(probs.size() == 2);
    CHECK(std::abs(probs[0].value - 0.5) < 1e-12);
    CHECK(std::abs(probs[1].value - 0.25) < 1e-12);
    // a perturbed coefficient falls outside the enclosure
    IntPoly bad = d_poly(20);
    std::vector<Int> c = bad.coeffs();
    c[3] += 1;
    CHECK_FALSE(bernoulli_reconstructs(IntPoly(c), bernoulli_decomposition_d(20, eps)));
    CHECK_THROWS_AS(bernoulli_decomposition(from_roots({1, -1}), eps), std::invalid_argument);
  }

  TEST_CASE("normality diagnostic") {
    const NormalityReport r = normality_diagnostic(50);
    CHECK(r.bernoulli_moments_ok);
    CHECK(std::abs(to_double(r.mean) - 14.4003) < 5e-5);
    CHECK(std::abs(to_double(r.variance) - 2.0409) < 5e-5);
    CHECK(std::abs(r.sup_cdf_distance - 0.005371) < 5e-6);
    const std::vector<Ratio> coin{make_ratio(1, 2), make_ratio(1, 2)};
    CHECK(std::abs(sup_cdf_distance(coin, make_ratio(1, 2), make_ratio(1, 4)) - 0.022750131948179) < 1e-12);
  }

  TEST_CASE("json brackets carry exact endpoints") {
    const std::string j = to_json(d_poly_roots(4));
    CHECK(j.find("\"exact\"") != std::string::npos);
    CHECK(j.find("\"hi\":\"0\"") != std::string::npos);
  }
}
