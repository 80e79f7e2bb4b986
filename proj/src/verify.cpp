#include "blockpoly/verify.hpp"

#include "blockpoly/bounds.hpp"
#include "blockpoly/modular.hpp"
#include "blockpoly/ogf.hpp"
#include "blockpoly/oracle.hpp"
#include "blockpoly/peaks.hpp"
#include "blockpoly/polynomials.hpp"
#include "blockpoly/real_roots.hpp"
#include "blockpoly/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

namespace blockpoly {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      r_.passed = false;
      if (r_.failures.size() < 20) r_.failures.push_back(what);
    }
  }

 private:
  SuiteResult& r_;
};

std::string at(std::size_t n) { return "n=" + std::to_string(n); }

std::vector<Count> padded(std::vector<Count> v, std::size_t size) {
  v.resize(std::max(v.size(), size));
  return v;
}

bool same_row(const std::vector<Count>& a, const std::vector<Count>& b) {
  const std::size_t size = std::max(a.size(), b.size());
  return padded(a, size) == padded(b, size);
}

void recurrence_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 3; n <= max_n; ++n) c.check(check_functional_recurrence(n), "functional recurrence " + at(n));
  for (std::size_t n = 1; n <= max_n; ++n) {
    c.check(row_total(triangle_row(TriangleKind::s(), n)) == bell(n), "S row total is B(n) " + at(n));
    c.check(row_total(triangle_row(TriangleKind::c(), n)) == factorial(n), "c row total is n! " + at(n));
    c.check(triangle_row(TriangleKind::dm(2), n) == triangle_row(TriangleKind::d(), n), "D_2 equals D " + at(n));
    c.check(triangle_row(TriangleKind::dm(1), n) == triangle_row(TriangleKind::s(), n), "D_1 equals S " + at(n));
    c.check(triangle_row(TriangleKind::dr(0), n) == triangle_row(TriangleKind::c(), n), "d_0 equals c " + at(n));
  }
}

void interlacing_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 5; n <= max_n; ++n) {
    const InterlacingReport r = verify_interlacing(n);
    c.check(r.chain_verified, "interlacing " + at(n) + ": " + r.failure);
    const auto expected = n % 2 == 0 ? InterlacingPattern::ExtraLeftmost : InterlacingPattern::SameDegree;
    c.check(r.pattern == expected, "degree pattern " + at(n));
  }
  for (std::size_t n = 10; n <= max_n; n += 10) c.check(sturm_certify_d_roots(n), "Sturm checkpoint " + at(n));
}

void realroots_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const RealRootedness r = verify_real_rooted(d_poly(n));
    c.check(r.all_real && r.all_simple.value_or(false) && r.all_nonpositive.value_or(false),
            "D_n real-rooted, simple, nonpositive " + at(n));
    c.check(r.distinct_real_roots == n / 2, "D_n has floor(n/2) roots " + at(n));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 30); ++n) {
    c.check(verify_real_rooted(s_poly(n)).all_real, "S_n real-rooted " + at(n));
    c.check(verify_real_rooted(c_poly(n)).all_real, "c_n real-rooted " + at(n));
  }
}

void logconcavity_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 6; n <= max_n; ++n) c.check(strong_log_concavity_check(n), "strong log-concavity " + at(n));
}

void darroch_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 4; n <= max_n; ++n) {
    const PeakReport r = darroch_locate(d_poly(n));
    c.check(r.darroch_ok, "|mu - m| < 1 " + at(n));
    const auto& peaks = r.peak_indices;
    c.check(!peaks.empty() && peaks.size() <= 2 && (peaks.size() == 1 || peaks[1] == peaks[0] + 1),
            "peak set is one index or two consecutive " + at(n));
    c.check(r.mu == block_count_mean(n), "mean from D totals " + at(n));
  }
}

void identities_suite(Checker& c, std::size_t max_n) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const BellIdentityReport r = verify_bell_identities(n);
    c.check(r.a && r.b && r.c, "Bell identity and moment corollaries " + at(n));
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    const BellInversionReport r = bell_d_inversion(n);
    c.check(r.d_from_bell && r.bell_from_d, "Bell/D inversion " + at(n));
  }
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 40); ++n)
    for (std::size_t k = 0; k <= 20; ++k)
      c.check(binomial_transform_d(n, k) == d_count(n, k), "binomial transform " + at(n) + " k=" + std::to_string(k));
  for (unsigned m = 2; m <= 4; ++m)
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t k = 0; k <= 4; ++k)
        c.check(binomial_transform_dm(n, k, m) == d_m_block(n, k, m),
                "D_m inclusion-exclusion m=" + std::to_string(m) + " " + at(n) + " k=" + std::to_string(k));
}

void congruence_suite(Checker& c, std::size_t max_n) {
  const std::uint64_t limit = std::max<std::size_t>(max_n, 13);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    const std::string tag = "p=" + std::to_string(p);
    for (const auto& cert : check_prime_row_divisibility(p)) c.check(cert.verified, cert.triangle + "(p,k) = 0 " + tag);
    c.check(check_d_total_congruence(p).verified, "D_p = 1 " + tag);
    if (p > 2) c.check(check_bell_congruence(p).verified, "B(p) = 2 " + tag);

    if (p >= 5) {
      Row bad = triangle_row(TriangleKind::d(), p);
      bad[2] += 1;
      c.check(!verify_row_divisibility(p, bad, "D").verified, "perturbed D row detected " + tag);
      c.check(verify_row_divisibility(p, triangle_row(TriangleKind::d(), p), "D").verified,
              "exact D row agrees with residues " + tag);
      c.check(!verify_total_congruence(p, d_total(p) + 1, CongruenceKind::DTotal).verified,
              "perturbed D_p detected " + tag);
      c.check(!verify_total_congruence(p, bell(p) + 1, CongruenceKind::Bell).verified, "perturbed B(p) detected " + tag);
    }
  }
  std::vector<Count> b, d;
  for (std::size_t i = 0; i <= 10; ++i) {
    b.push_back(bell(i));
    d.push_back(d_total(i));
  }
  d[10] += 1;
  const BellInversionReport r = bell_d_inversion(10, b, d);
  c.check(!r.d_from_bell && !r.bell_from_d, "perturbed D_10 detected by the inversion pair");
}

void ogf_suite(Checker& c, std::size_t max_n) {
  for (std::size_t k = 1; k <= 8; ++k) {
    try {
      const WardForm w = ward_form(k);
      c.check(reassemble(w) == f_k(k), "Ward form reassembles k=" + std::to_string(k));
      principal_part(k);
      c.check(true, "principal part k=" + std::to_string(k));
    } catch (const std::exception& e) {
      c.check(false, e.what());
    }
    const auto series = series_prefix(f_k(k), max_n);
    for (std::size_t n = 0; n <= max_n; ++n)
      c.check(series[n] == Ratio(d_count(n, k)), "series coefficient k=" + std::to_string(k) + " " + at(n));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto egf = egf_prefix(k, std::min<std::size_t>(max_n, 30));
    for (std::size_t n = 0; n < egf.size(); ++n)
      c.check(egf[n] * Ratio(factorial(n)) == Ratio(d_count(n, k)), "EGF k=" + std::to_string(k) + " " + at(n));
  }
  const auto total = egf_d_total_prefix(std::min<std::size_t>(max_n, 30));
  for (std::size_t n = 0; n < total.size(); ++n)
    c.check(total[n] * Ratio(factorial(n)) == Ratio(d_total(n)), "EGF of D totals " + at(n));
}

void asymptotics_suite(Checker& c, std::size_t max_n) {
  const std::size_t hi = std::max<std::size_t>(max_n, 40);
  for (std::size_t k = 2; k <= 4; ++k) {
    const AsymptoticErrorReport r = asymptotic_error_check(k, 20, hi, 0.1);
    c.check(r.bounded, "normalized error bounded k=" + std::to_string(k));
    c.check(std::abs(r.ratios.back() - 1) < std::abs(r.ratios.front() - 1), "ratio tends to 1 k=" + std::to_string(k));
  }
  for (std::size_t n = 10; n <= max_n; n += 10) {
    const AsymptoticRatioReport r = asymptotic_ratio_report(n);
    c.check(r.singleton_mean == Ratio(static_cast<unsigned long>(n)) / r.bell_ratio,
            "singleton mean is n B(n-1)/B(n) " + at(n));
  }
}

void bounds_suite(Checker& c, std::size_t max_n) {
  const Ratio eps = make_ratio(1, 1000);
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 60); ++n) {
    const SamuelsonReport r = samuelson_vs_actual(n, eps);
    c.check(r.coefficient_ratios_ok, "a1, a2 coefficient ratios " + at(n));
    c.check(r.dominates, "Samuelson dominates the leftmost root " + at(n));
    if (n % 2 == 0 && n >= 10)
      c.check(r.estimate_over_actual >= 1 && r.estimate_over_actual <= 1.05, "estimate/actual in [1, 1.05] " + at(n));
  }
  for (std::size_t n = 2; n <= max_n; ++n)
    c.check(special_value_max_k(n) == d_count(n, n / 2), "special value at k = floor(n/2) " + at(n));
}

void oracle_suite(Checker& c, std::size_t max_n) {
  const std::size_t partitions = std::min<std::size_t>(max_n, 10);
  for (std::size_t n = 0; n <= partitions; ++n) {
    c.check(same_row(count_partitions_by_blocks(n, 2), triangle_row(TriangleKind::d(), n)), "D by enumeration " + at(n));
    c.check(same_row(count_partitions_by_blocks(n, 1), triangle_row(TriangleKind::s(), n)), "S by enumeration " + at(n));
    for (unsigned m = 3; m <= 4; ++m)
      c.check(same_row(count_partitions_by_blocks(n, m), triangle_row(TriangleKind::dm(m), n)),
              "D_m by enumeration m=" + std::to_string(m) + " " + at(n));
  }
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n)
    for (unsigned r = 0; r <= 3; ++r)
      c.check(same_row(count_permutations_by_cycles(n, r), triangle_row(TriangleKind::dr(r), n)),
              "d_r by cycle types r=" + std::to_string(r) + " " + at(n));
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 7); ++n)
    c.check(same_row(count_permutations_exhaustive(n, 1), count_permutations_by_cycles(n, 1)),
            "cycle types agree with exhaustive walk " + at(n));
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 8); ++n) {
    const BijectionReport r = verify_singleton_bijection(n);
    c.check(r.injective && r.surjective, "singleton bijection " + at(n));
  }
  for (std::size_t n = 2; n <= partitions; ++n)
    c.check(mean_blocks_by_enumeration(n, 2) == block_count_mean(n), "mean block count " + at(n));
}

void normality_suite(Checker& c, std::size_t max_n) {
  const Ratio eps = Ratio(1) / Ratio(Count(1) << 40);
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 40); ++n) {
    const auto probs = bernoulli_decomposition_d(n, eps);
    c.check(bernoulli_reconstructs(d_poly(n), probs), "Bernoulli reconstruction " + at(n));
  }
  for (std::size_t n = 10; n <= max_n; n += 10) {
    const NormalityReport r = normality_diagnostic(n);
    c.check(r.bernoulli_moments_ok, "Bernoulli moments " + at(n));
    c.check(r.sup_cdf_distance < 0.5, "finite CDF distance " + at(n));
  }
}

using SuiteFn = void (*)(Checker&, std::size_t);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"recurrence", recurrence_suite},   {"interlacing", interlacing_suite}, {"realroots", realroots_suite},
      {"logconcavity", logconcavity_suite}, {"darroch", darroch_suite},       {"identities", identities_suite},
      {"congruence", congruence_suite},   {"ogf", ogf_suite},                 {"asymptotics", asymptotics_suite},
      {"bounds", bounds_suite},           {"oracle", oracle_suite},           {"normality", normality_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"recurrence", "interlacing", "realroots",   "logconcavity",
                                              "darroch",    "identities",  "congruence",  "ogf",
                                              "asymptotics", "bounds",     "oracle",      "normality"};
  return names;
}

bool is_suite_name(const std::string& name) { return name == "all" || suite_table().count(name) > 0; }

SuiteResult run_suite(const std::string& name, std::size_t max_n) {
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw std::invalid_argument("unknown suite `" + name + "`");
  SuiteResult result;
  result.name = name;
  Checker checker(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(checker, max_n);
  } catch (const std::exception& e) {
    checker.check(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_suites(const std::string& name, std::size_t max_n) {
  if (name != "all") return {run_suite(name, max_n)};
  std::vector<std::future<SuiteResult>> futures;
  for (const auto& suite : suite_names())
    futures.push_back(std::async(std::launch::async, [suite, max_n] { return run_suite(suite, max_n); }));
  std::vector<SuiteResult> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace blockpoly
