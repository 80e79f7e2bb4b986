#include "blockpoly/peaks.hpp"

#include "blockpoly/oracle.hpp"
#include "blockpoly/triangle.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace blockpoly {

Ratio block_count_mean(std::size_t n) {
  if (n < 2) throw std::domain_error("block_count_mean needs n >= 2 (D(1) = 0)");
  Count numerator = d_total(n + 1) - Count(static_cast<unsigned long>(n)) * d_total(n - 1);
  return make_ratio(numerator, d_total(n));
}

std::vector<std::size_t> argmax_indices(const std::vector<Int>& coeffs) {
  std::vector<std::size_t> out;
  if (coeffs.empty()) return out;
  const Int* best = &coeffs[0];
  for (const auto& c : coeffs)
    if (c > *best) best = &c;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] == *best) out.push_back(k);
  return out;
}

PeakReport darroch_locate(const IntPoly& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) throw std::invalid_argument("Darroch's bound needs nonnegative coefficients");
  const Ratio at_one = eval_rational(p, Ratio(1));
  if (at_one <= 0) throw std::invalid_argument("Darroch's bound needs p(1) > 0");
  PeakReport out;
  out.n = static_cast<std::size_t>(p.degree());
  out.mu = eval_rational(p.derivative(), Ratio(1)) / at_one;
  out.peak_indices = argmax_indices(p.coeffs());
  for (auto m : out.peak_indices)
    if (abs(Ratio(out.mu - static_cast<unsigned long>(m))) < 1) out.darroch_ok = true;
  return out;
}

bool strong_log_concavity(const std::vector<Int>& b) {
  // b[0] is b_1; d is the last support index.
  const std::size_t d = b.size();
  for (std::size_t j = 2; j < d; ++j) {
    const Int& left = b[j - 2];
    const Int& mid = b[j - 1];
    const Int& right = b[j];
    // b_j^2 * j * (d-j) >= b_{j-1} b_{j+1} (j+1)(d-j+1), all factors positive.
    Int lhs = mid * mid * static_cast<unsigned long>(j) * static_cast<unsigned long>(d - j);
    Int rhs = left * right * static_cast<unsigned long>(j + 1) * static_cast<unsigned long>(d - j + 1);
    if (lhs < rhs) return false;
  }
  return true;
}

bool strong_log_concavity_check(std::size_t n) {
  const Row& row = triangle_row(TriangleKind::d(), n);
  return strong_log_concavity(std::vector<Int>(row.begin() + 1, row.end()));
}

double lambert_w(double x) {
  if (!(x >= 0) || !std::isfinite(x)) throw std::domain_error("lambert_w needs a finite x >= 0");
  if (x == 0) return 0;
  double lo = 0, hi = 1;
  if (x > std::exp(1.0)) {
    const double l = std::log(x);
    lo = l - std::log(l);
    hi = l;
  }
  double w = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0) return w;
    if (f < 0)
      lo = w;
    else
      hi = w;
    double next = w - f / (ew * (w + 1));
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - w) <= 1e-16 * std::max(1.0, std::abs(w))) return next;
    w = next;
  }
  return w;
}

double stirling_peak_approx(double n) { return std::exp(lambert_w(n)) - 1; }

double peak_approx_lambert(double n) {
  const double shifted = n - 0.5;
  return shifted / lambert_w(shifted);
}

NonSingletonMoments non_singleton_block_moments(std::size_t n) {
  NonSingletonMoments out;
  for (std::size_t j = 0; j <= n; ++j) {
    // j elements are singletons; the remaining n - j form a singleton-free
    // partition whose blocks are exactly the non-singleton blocks.
    const Row& row = triangle_row(TriangleKind::d(), n - j);
    Count first, second;
    for (std::size_t k = 1; k < row.size(); ++k) {
      first += row[k] * static_cast<unsigned long>(k);
      second += row[k] * static_cast<unsigned long>(k * k);
    }
    const Count ways = binomial(n, j);
    out.total += ways * first;
    out.total_squares += ways * second;
  }
  return out;
}

BellIdentityReport verify_bell_identities(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Bell identities are checked for n >= 2");
  BellIdentityReport out;
  out.n = n;
  const Count b = bell(n);
  const Count dn = d_total(n);
  const Count dn1 = d_total(n + 1);
  out.a = b == dn + dn1;

  const IntPoly next = d_poly(n + 1);
  const IntPoly cur = d_poly(n);
  const Ratio one(1);
  const Ratio a0 = eval_rational(next, one);
  const Ratio a1 = eval_rational(next.derivative(), one);
  const Ratio a2 = eval_rational(next.derivative().derivative(), one);
  const Ratio c0 = eval_rational(cur, one);
  const Ratio c1 = eval_rational(cur.derivative(), one);
  const Ratio c2 = eval_rational(cur.derivative().derivative(), one);
  const Ratio weight_next = Ratio(dn1) / Ratio(b);
  const Ratio weight_cur = Ratio(dn) / Ratio(b);

  // E(X_{n+1} - 1) and E((X_{n+1} - 1)^2) from A(1), A'(1), A''(1).
  const Ratio shifted_mean = a1 / a0 - 1;
  const Ratio shifted_second = (a2 - a1 + a0) / a0;
  const Ratio mean = c1 / c0;
  const Ratio second = (c2 + c1) / c0;

  NonSingletonMoments moments;
  if (n <= kNonSingletonOracleMax) {
    moments = non_singleton_moments_by_enumeration(n);
    out.used_oracle = true;
  } else {
    moments = non_singleton_block_moments(n);
  }
  out.expected_non_singleton = Ratio(moments.total) / Ratio(b);
  const Ratio expected_square = Ratio(moments.total_squares) / Ratio(b);
  out.b = shifted_mean * weight_next + mean * weight_cur == out.expected_non_singleton;
  out.c = shifted_second * weight_next + second * weight_cur == expected_square;
  return out;
}

AsymptoticRatioReport asymptotic_ratio_report(std::size_t n) {
  if (n < 3) throw std::invalid_argument("asymptotic ratios are reported for n >= 3");
  AsymptoticRatioReport out;
  out.n = n;
  const Count b = bell(n);
  const Count prev = bell(n - 1);
  out.bell_ratio = make_ratio(b, prev);
  out.singleton_mean = make_ratio(prev * static_cast<unsigned long>(n), b);
  out.d_over_bell = make_ratio(d_total(n + 1), b);
  out.bell_ratio_approx = to_double(out.bell_ratio);
  out.singleton_mean_approx = to_double(out.singleton_mean);
  out.d_over_bell_approx = to_double(out.d_over_bell);
  const double log_n = std::log(static_cast<double>(n));
  out.predicted_bell_ratio = static_cast<double>(n) / (std::exp(1.0) * log_n);
  out.predicted_singleton_mean = std::exp(1.0) * log_n;
  return out;
}

std::string peak_report_json(std::size_t n) {
  PeakReport peak = darroch_locate(d_poly(n));
  peak.n = n;
  BellIdentityReport ids = verify_bell_identities(n);
  nlohmann::json j;
  j["n"] = n;
  j["mu"] = to_string(peak.mu);
  j["peaks"] = peak.peak_indices;
  j["darroch_ok"] = peak.darroch_ok;
  j["identities"] = {{"a", ids.a}, {"b", ids.b}, {"c", ids.c}};
  return j.dump();
}

}  // namespace blockpoly
