#include "blockpoly/real_roots.hpp"
#include "blockpoly/triangle.hpp"

#include <cmath>

namespace blockpoly {

namespace {

void check_nonnegative(const IntPoly& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) throw std::invalid_argument("Bernoulli decomposition needs nonnegative coefficients");
  if (eval_rational(p, Ratio(1)) <= 0) throw std::invalid_argument("Bernoulli decomposition needs p(1) > 0");
}

BernoulliProb probability_from(const RootBracket& b) {
  BernoulliProb out;
  if (b.certificate == Certificate::ExactRoot) {
    out.lo = out.hi = Ratio(1) / (Ratio(1) - b.hi);
  } else {
    // The root is known to be <= 0, so the upper end may be clipped at 0.
    const Ratio hi = b.hi > 0 ? Ratio(0) : b.hi;
    out.lo = Ratio(1) / (Ratio(1) - b.lo);
    out.hi = Ratio(1) / (Ratio(1) - hi);
  }
  out.value = to_double(Ratio((out.lo + out.hi) / 2));
  out.error = to_double(Ratio((out.hi - out.lo) / 2));
  // Absorb the rounding of value into the reported error.
  out.error += std::ldexp(std::abs(out.value), -51);
  return out;
}

}  // namespace

std::vector<BernoulliProb> bernoulli_decomposition(const IntPoly& p, const Ratio& eps) {
  check_nonnegative(p);
  RealRootedness rr = verify_real_rooted(p);
  if (rr.all_real && !rr.all_nonpositive.value_or(false))
    throw std::invalid_argument("Bernoulli decomposition needs nonpositive roots");
  std::vector<BernoulliProb> out;
  for (const auto& b : isolate_roots(p)) out.push_back(probability_from(refine(b, p, eps)));
  return out;
}

std::vector<BernoulliProb> bernoulli_decomposition_d(std::size_t n, const Ratio& eps) {
  const IntPoly p = d_poly(n);
  std::vector<BernoulliProb> out;
  for (const auto& b : d_poly_roots(n)) out.push_back(probability_from(refine(b, p, eps)));
  return out;
}

bool bernoulli_reconstructs(const IntPoly& p, const std::vector<BernoulliProb>& probs) {
  if (static_cast<long>(probs.size()) != p.degree()) return false;
  // All factors have nonnegative coefficients, so the coefficientwise product
  // of lower (upper) ends bounds the true product from below (above).
  RatPoly lower = RatPoly::constant(Ratio(1));
  RatPoly upper = RatPoly::constant(Ratio(1));
  for (const auto& pr : probs) {
    lower = lower * RatPoly{Ratio(1 - pr.hi), pr.lo};
    upper = upper * RatPoly{Ratio(1 - pr.lo), pr.hi};
  }
  const Ratio total = eval_rational(p, Ratio(1));
  for (std::size_t k = 0; k < p.size(); ++k) {
    Ratio target = Ratio(p.coeff(k)) / total;
    if (target < lower.coeff(k) || target > upper.coeff(k)) return false;
  }
  return true;
}

double sup_cdf_distance(const std::vector<Ratio>& distribution, const Ratio& mean, const Ratio& variance) {
  const double mu = to_double(mean);
  const double sd = std::sqrt(to_double(variance));
  Ratio cumulative;
  double sup = 0;
  for (std::size_t k = 0; k < distribution.size(); ++k) {
    cumulative += distribution[k];
    const double z = (static_cast<double>(k) + 0.5 - mu) / sd;
    const double gauss = 0.5 * std::erfc(-z / std::sqrt(2.0));
    sup = std::max(sup, std::abs(to_double(cumulative) - gauss));
  }
  return sup;
}

NormalityReport normality_diagnostic(std::size_t n) {
  if (n < 4) throw std::invalid_argument("normality diagnostic needs n >= 4");
  NormalityReport report;
  report.n = n;
  const Row& row = triangle_row(TriangleKind::d(), n);
  const Count total = row_total(row);
  Ratio second;
  for (std::size_t k = 0; k < row.size(); ++k) {
    Ratio pk = make_ratio(row[k], total);
    report.mean += pk * static_cast<unsigned long>(k);
    second += pk * static_cast<unsigned long>(k * k);
    report.distribution.push_back(std::move(pk));
  }
  report.variance = second - report.mean * report.mean;
  report.sup_cdf_distance = sup_cdf_distance(report.distribution, report.mean, report.variance);

  report.bernoulli_probs = bernoulli_decomposition_d(n, make_ratio(1, 1L << 40));
  Ratio mean_lo, mean_hi, var_lo, var_hi;
  for (const auto& pr : report.bernoulli_probs) {
    mean_lo += pr.lo;
    mean_hi += pr.hi;
    // p(1-p) is decreasing on [1/2, 1]; fall back to the crude enclosure
    // [min(lo(1-hi)...), 1/4] when the interval reaches below 1/2.
    if (pr.lo >= Ratio(1, 2)) {
      var_lo += pr.hi * (1 - pr.hi);
      var_hi += pr.lo * (1 - pr.lo);
    } else {
      var_lo += std::min(Ratio(pr.lo * (1 - pr.lo)), Ratio(pr.hi * (1 - pr.hi)));
      var_hi += pr.hi < Ratio(1, 2) ? Ratio(pr.hi * (1 - pr.hi)) : Ratio(1, 4);
    }
  }
  report.bernoulli_moments_ok = mean_lo <= report.mean && report.mean <= mean_hi && var_lo <= report.variance &&
                                report.variance <= var_hi;
  return report;
}

}  // namespace blockpoly
