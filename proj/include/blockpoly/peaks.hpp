#pragma once

// Peaks, means and moment identities of the block-count distributions.

#include "blockpoly/numeric.hpp"
#include "blockpoly/polynomials.hpp"

#include <string>
#include <vector>

namespace blockpoly {

/// E(X_n) = (D(n+1) - n D(n-1)) / D(n), the mean number of blocks of a
/// singleton-free partition of [n]. Throws std::domain_error for n < 2.
Ratio block_count_mean(std::size_t n);

struct PeakReport {
  std::size_t n = 0;
  Ratio mu;
  /// Indices of the maximal coefficient (one index, or two consecutive).
  std::vector<std::size_t> peak_indices;
  bool darroch_ok = false;
};

/// Every index where the coefficient sequence attains its maximum.
std::vector<std::size_t> argmax_indices(const std::vector<Int>& coeffs);

/// mu = p'(1)/p(1) and the coefficient peak(s); darroch_ok iff |mu - m| < 1
/// for some peak m. Throws std::invalid_argument for negative coefficients
/// or p(1) <= 0.
PeakReport darroch_locate(const IntPoly& p);

/// Strong log-concavity of the coefficients b_1..b_d of D_n (d = deg D_n):
/// b_j^2 >= b_{j-1} b_{j+1} (j+1)/j (d-j+1)/(d-j) for 2 <= j <= d-1.
bool strong_log_concavity_check(std::size_t n);
bool strong_log_concavity(const std::vector<Int>& support_coeffs);

/// Principal branch of Lambert W on [0, inf): W e^W = x. Throws
/// std::domain_error for negative or non-finite x.
double lambert_w(double x);

/// e^r - 1 where r e^r = n (r found by safeguarded Newton).
double stirling_peak_approx(double n);

/// (n - 1/2) / W(n - 1/2).
double peak_approx_lambert(double n);

/// Total and squared total of non-singleton blocks over all partitions of
/// [n]: sum_j C(n,j) sum_k k^e D(n-j,k) for e = 1, 2.
struct NonSingletonMoments {
  Count total;
  Count total_squares;
};
NonSingletonMoments non_singleton_block_moments(std::size_t n);

struct BellIdentityReport {
  std::size_t n = 0;
  bool a = false;  // B(n) = D(n) + D(n+1)
  bool b = false;  // first-moment identity
  bool c = false;  // second-moment identity
  bool used_oracle = false;
  Ratio expected_non_singleton;
};

/// Exact check of the Bell identity and its two moment corollaries. The
/// non-singleton block moments come from enumeration for n <= 12 and from
/// the D-triangle convolution above that.
BellIdentityReport verify_bell_identities(std::size_t n);

struct AsymptoticRatioReport {
  std::size_t n = 0;
  Ratio bell_ratio;           // B(n)/B(n-1)
  Ratio singleton_mean;       // n B(n-1)/B(n)
  Ratio d_over_bell;          // D(n+1)/B(n)
  double bell_ratio_approx = 0;
  double singleton_mean_approx = 0;
  double d_over_bell_approx = 0;
  double predicted_bell_ratio = 0;      // n/(e log n)
  double predicted_singleton_mean = 0;  // e log n
};

AsymptoticRatioReport asymptotic_ratio_report(std::size_t n);

/// JSON {n, mu, peaks, darroch_ok, identities: {a, b, c}} for D_n.
std::string peak_report_json(std::size_t n);

}  // namespace blockpoly
