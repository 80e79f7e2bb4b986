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
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace blockpoly;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    passed_ = false;
    if (failures_++ < 5) text_ << (text_.tellp() > 0 ? "; " : "") << what;
  }
  void info(const std::string& what) { info_ << (info_.tellp() > 0 ? "; " : "") << what; }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome() const {
    std::string detail = info_.str();
    if (!passed_) detail = "failed: " + text_.str() + (failures_ > 5 ? " (+" + std::to_string(failures_ - 5) + " more)" : "") +
                           (detail.empty() ? "" : " | " + detail);
    return {passed_, detail};
  }

 private:
  bool passed_ = true;
  std::size_t failures_ = 0;
  std::ostringstream text_;
  std::ostringstream info_;
};

std::string at(std::size_t n) { return "n=" + std::to_string(n); }

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

IntPoly power(const IntPoly& p, std::size_t e) {
  IntPoly out = ip({1});
  for (std::size_t i = 0; i < e; ++i) out = out * p;
  return out;
}

bool same_row(std::vector<Count> a, std::vector<Count> b) {
  const std::size_t size = std::max(a.size(), b.size());
  a.resize(size);
  b.resize(size);
  return a == b;
}

Outcome base_polynomials() {
  Notes c;
  c.check(d_poly(4) == ip({0, 1, 3}), "D_4 != 3x^2 + x");
  c.check(d_poly(5) == ip({0, 1, 10}), "D_5 != 10x^2 + x");
  return c.outcome();
}

Outcome oracle_equivalence() {
  Notes c;
  for (std::size_t n = 0; n <= 13; ++n) {
    c.check(same_row(count_partitions_by_blocks(n, 2), triangle_row(TriangleKind::d(), n)), "D " + at(n));
    c.check(same_row(count_partitions_by_blocks(n, 1), triangle_row(TriangleKind::s(), n)), "S " + at(n));
    for (unsigned m = 3; m <= 4; ++m)
      c.check(same_row(count_partitions_by_blocks(n, m), triangle_row(TriangleKind::dm(m), n)),
              "D_" + std::to_string(m) + " " + at(n));
  }
  for (std::size_t n = 0; n <= 9; ++n)
    for (unsigned r = 0; r <= 3; ++r)
      c.check(same_row(count_permutations_by_cycles(n, r), triangle_row(TriangleKind::dr(r), n)),
              "d_" + std::to_string(r) + " " + at(n));
  c.info("D, S, D_3, D_4 for n <= 13; d_0..d_3 for n <= 9");
  return c.outcome();
}

Outcome functional_recurrence() {
  Notes c;
  for (std::size_t n = 3; n <= 300; ++n) c.check(check_functional_recurrence(n), at(n));
  return c.outcome();
}

Outcome interlacing() {
  Notes c;
  for (std::size_t n = 2; n <= 4; ++n) {
    const RealRootedness r = verify_real_rooted(d_poly(n));
    c.check(r.all_real && r.all_simple.value_or(false) && r.all_nonpositive.value_or(false), "real-rooted " + at(n));
  }
  for (std::size_t n = 5; n <= 120; ++n) {
    const InterlacingReport r = verify_interlacing(n);
    c.check(r.chain_verified, "interlacing " + at(n) + " " + r.failure);
    const auto expected = n % 2 == 0 ? InterlacingPattern::ExtraLeftmost : InterlacingPattern::SameDegree;
    c.check(r.pattern == expected, "degree pattern " + at(n));
    c.check(r.degrees.first == n / 2 && r.degrees.second == (n - 1) / 2, "degrees " + at(n));
  }
  for (std::size_t n = 10; n <= 120; n += 10) c.check(sturm_certify_d_roots(n), "Sturm count " + at(n));
  c.info("2 <= n <= 120");
  return c.outcome();
}

Outcome samuelson_tables() {
  Notes c;
  struct Printed {
    std::size_t n;
    double z, z_unit, x, x_unit;
  };
  const Ratio eps = make_ratio(1, 1000000000);
  for (const Printed& p : {Printed{10, 9.22, 0.01, 9.24, 0.01}, Printed{100, 11085.5, 0.1, 11160.8, 0.1},
                           Printed{200, 89380.6, 0.1, 90011.4, 0.1}, Printed{11, 2.828, 0.001, 2.85, 0.01},
                           Printed{101, 2852.96, 0.01, 2958.05, 0.01}, Printed{201, 22677.2, 0.1, 23552.4, 0.1}}) {
    const SamuelsonReport r = samuelson_vs_actual(p.n, eps);
    const double z = std::abs(r.z_star_approx), x = std::abs(r.x_minus);
    c.check(std::abs(z - p.z) <= p.z_unit, "|z*| " + at(p.n) + " = " + fmt(z, 10));
    c.check(std::abs(x - p.x) <= p.x_unit, "estimate " + at(p.n) + " = " + fmt(x, 10));
    c.check(r.dominates, "estimate does not dominate " + at(p.n));
    c.info(at(p.n) + " (" + fmt(z, 8) + ", " + fmt(x, 8) + ")");
  }
  return c.outcome();
}

Outcome special_values() {
  Notes c;
  for (std::size_t n = 2; n <= 300; ++n) c.check(special_value_max_k(n) == d_count(n, n / 2), "D(n, n/2) " + at(n));
  const double band = 0.15;
  const double even = samuelson_scaling(200), odd = samuelson_scaling(201);
  const double even_rel = std::abs(even / samuelson_scaling_limit_even() - 1);
  const double odd_rel = std::abs(odd / samuelson_scaling_limit_odd() - 1);
  c.check(even_rel <= band, "n=200 scaling off by " + fmt(even_rel, 3));
  c.check(odd_rel <= band, "n=201 scaling off by " + fmt(odd_rel, 3));
  c.info("x-/n^3: n=200 " + fmt(even, 6) + " (" + fmt(100 * even_rel, 3) + "%), n=201 " + fmt(odd, 6) + " (" +
         fmt(100 * odd_rel, 3) + "%), band 15%");
  return c.outcome();
}

Outcome darroch() {
  Notes c;
  for (std::size_t n = 4; n <= 200; ++n) {
    const PeakReport r = darroch_locate(d_poly(n));
    c.check(r.darroch_ok, "|mu - m| >= 1 " + at(n));
    for (auto m : r.peak_indices) c.check(abs(r.mu - Ratio(static_cast<long>(m))) < 1, "peak far from mean " + at(n));
    const auto& p = r.peak_indices;
    c.check(!p.empty() && p.size() <= 2 && (p.size() == 1 || p[1] == p[0] + 1), "peak set " + at(n));
  }
  for (std::size_t n = 6; n <= 300; ++n) c.check(strong_log_concavity_check(n), "strong log-concavity " + at(n));
  return c.outcome();
}

Outcome identities() {
  Notes c;
  for (std::size_t n = 0; n <= 500; ++n) c.check(bell(n) == d_total(n) + d_total(n + 1), "B = D + D " + at(n));
  for (std::size_t n = 2; n <= 12; ++n) {
    const BellIdentityReport r = verify_bell_identities(n);
    c.check(r.used_oracle, "moments not from enumeration " + at(n));
    c.check(r.b, "first moment " + at(n));
    c.check(r.c, "second moment " + at(n));
  }
  for (std::size_t n = 0; n <= 100; ++n) {
    const BellInversionReport r = bell_d_inversion(n);
    c.check(r.d_from_bell && r.bell_from_d, "inversion pair " + at(n));
  }
  for (std::size_t n = 0; n <= 40; ++n)
    for (std::size_t k = 0; k <= n / 2 + 1; ++k)
      c.check(binomial_transform_d(n, k) == d_count(n, k), "binomial transform " + at(n) + " k=" + std::to_string(k));
  return c.outcome();
}

Outcome congruences() {
  Notes c;
  std::size_t primes = 0;
  for (std::uint64_t p = 2; p <= 199; ++p) {
    if (!is_prime(p)) continue;
    ++primes;
    for (const auto& cert : check_prime_row_divisibility(p)) c.check(cert.verified, cert.triangle + " row p=" + std::to_string(p));
    c.check(check_d_total_congruence(p).verified, "D_p p=" + std::to_string(p));
    if (p > 2) c.check(check_bell_congruence(p).verified, "B(p) p=" + std::to_string(p));
  }
  Row row = triangle_row(TriangleKind::d(), 13);
  row[3] += 1;
  c.check(!verify_row_divisibility(13, row, "D").verified, "perturbed D row accepted");
  c.check(!verify_total_congruence(13, d_total(13) + 1, CongruenceKind::DTotal).verified, "perturbed D_p accepted");
  c.check(!verify_total_congruence(13, bell(13) + 1, CongruenceKind::Bell).verified, "perturbed B(p) accepted");
  bool composite_rejected = false;
  try {
    composite_rejected = !verify_total_congruence(15, d_total(15), CongruenceKind::DTotal).verified;
  } catch (const NotPrime&) {
    composite_rejected = true;
  }
  c.check(composite_rejected, "composite 15 accepted");
  c.info(std::to_string(primes) + " primes, 4 negative controls");
  return c.outcome();
}

Outcome ogf_layer() {
  Notes c;
  const IntPoly x1 = ip({-1, 1}), x2 = ip({-1, 2}), x3 = ip({-1, 3}), x4 = ip({-1, 4});
  c.check(f_k(1) == RatFunc(ip({0, 0, 1}), ip({1, -1})), "f_1");
  c.check(f_k(2) == RatFunc(ip({-3, 2}).shifted(4), power(x1, 2) * x2), "f_2");
  c.check(f_k(3) == RatFunc(ip({15, -45, 40, -12}).shifted(6), power(x1, 3) * power(x2, 2) * x3), "f_3");
  c.check(f_k(4) == RatFunc(ip({105, -840, 2625, -4130, 3500, -1560, 288}).shifted(8),
                            power(x1, 4) * power(x2, 3) * power(x3, 2) * x4),
          "f_4");
  for (std::size_t k = 1; k <= 10; ++k)
    c.check(ward_form(k).p_k.degree() == static_cast<long>(k * (k - 1) / 2), "deg p_k k=" + std::to_string(k));
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto s = series_prefix(f_k(k), 60);
    for (std::size_t n = 0; n <= 60; ++n) c.check(s[n] == Ratio(d_count(n, k)), "series k=" + std::to_string(k) + " " + at(n));
    c.check(series_coeff(f_k(k), 60) == Ratio(d_count(60, k)), "series_coeff k=" + std::to_string(k));
    const auto pp = series_prefix(principal_part(k), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      Count pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), k, n);
      c.check(pp[n] == Ratio(pw) / Ratio(factorial(k)), "principal part k=" + std::to_string(k) + " " + at(n));
    }
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    const AsymptoticErrorReport r = asymptotic_error_check(k, 20, 60, 0.1);
    c.check(r.bounded, "normalized error unbounded k=" + std::to_string(k));
    c.check(std::abs(r.ratios.back() - 1) < std::abs(r.ratios.front() - 1), "no trend to 1 k=" + std::to_string(k));
    c.info("k=" + std::to_string(k) + " D k!/k^n at n=60: " + fmt(r.ratios.back(), 8));
  }
  return c.outcome();
}

Outcome peak_asymptotics() {
  Notes c;
  const double band = 2;
  double worst_ds = 0, worst_dl = 0, worst_se = 0;
  for (std::size_t n = 20; n <= 200; ++n) {
    const PeakAsymptoticReport r = verify_peak_asymptotic(n);
    const double ds = std::abs(static_cast<double>(r.d_argmax) - static_cast<double>(r.stirling_argmax));
    const double dl = std::abs(static_cast<double>(r.d_argmax) - r.lambert_approx);
    const double se = std::abs(static_cast<double>(r.stirling_argmax) - r.stirling_approx);
    worst_ds = std::max(worst_ds, ds);
    worst_dl = std::max(worst_dl, dl);
    worst_se = std::max(worst_se, se);
    std::cout << "  n=" << n << " argmax D=" << r.d_argmax << " S=" << r.stirling_argmax
              << " lambert=" << fmt(r.lambert_approx, 5) << " e^r-1=" << fmt(r.stirling_approx, 5) << '\n';
    c.check(ds <= band, "|K*-K| = " + fmt(ds, 3) + " " + at(n));
    c.check(dl <= band, "|K* - lambert| = " + fmt(dl, 3) + " " + at(n));
    c.check(se <= band, "|K - (e^r-1)| = " + fmt(se, 3) + " " + at(n));
  }
  c.info("max |K*-K| " + fmt(worst_ds, 3) + ", max |K*-lambert| " + fmt(worst_dl, 3) + ", max |K-(e^r-1)| " +
         fmt(worst_se, 3) + ", band 2");
  return c.outcome();
}

Outcome normality() {
  Notes c;
  const double ceiling = 0.006;
  double previous = 1;
  std::string distances;
  for (std::size_t n : {50, 100, 150, 200}) {
    const NormalityReport r = normality_diagnostic(n);
    c.check(r.sup_cdf_distance < previous, "distance not decreasing at " + at(n));
    c.check(r.sup_cdf_distance < ceiling, "distance " + fmt(r.sup_cdf_distance, 4) + " above ceiling " + at(n));
    c.check(r.bernoulli_moments_ok, "Bernoulli moments " + at(n));
    previous = r.sup_cdf_distance;
    distances += (distances.empty() ? "" : ", ") + at(n) + " " + fmt(r.sup_cdf_distance, 4);
  }
  const Ratio eps = Ratio(1) / Ratio(Count(1) << 40);
  for (std::size_t n = 2; n <= 40; ++n)
    c.check(bernoulli_reconstructs(d_poly(n), bernoulli_decomposition_d(n, eps)), "reconstruction " + at(n));
  c.info("sup distance " + distances + ", ceiling 0.006");
  return c.outcome();
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"base polynomials D_4, D_5", base_polynomials},
      {"triangles equal exhaustive enumeration", oracle_equivalence},
      {"functional recurrence 3 <= n <= 300", functional_recurrence},
      {"real-rootedness and interlacing n <= 120", interlacing},
      {"Samuelson tables", samuelson_tables},
      {"special values and cubic scaling", special_values},
      {"Darroch peaks and strong log-concavity", darroch},
      {"Bell identities, moments, inversion, binomial transform", identities},
      {"prime congruences p <= 199", congruences},
      {"ordinary generating functions", ogf_layer},
      {"peak asymptotics within distance 2", peak_asymptotics},
      {"normal approximation diagnostic", normality},
  };
  return list;
}

bool run_one(std::size_t index) {
  const Criterion& criterion = criteria()[index - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = criterion.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (outcome.passed ? "PASS" : "FAIL") << ' ' << index << ". " << criterion.title << " [" << fmt(seconds, 3)
            << " s]";
  if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
  std::cout << std::endl;
  return outcome.passed;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    std::size_t index = 0;
    try {
      index = std::stoul(argv[i]);
    } catch (const std::exception&) {
    }
    if (index < 1 || index > criteria().size()) {
      std::cerr << "usage: blockpoly_acceptance [criterion 1-" << criteria().size() << "]...\n";
      return 2;
    }
    selected.push_back(index);
  }
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria().size(); ++i) selected.push_back(i);
  bool all = true;
  for (std::size_t index : selected) all = run_one(index) && all;
  return all ? 0 : 1;
}
