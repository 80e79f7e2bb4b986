#pragma once

// Ordinary generating functions f_k(x) = sum_n D(n,k) x^n as reduced
// rational functions, their factored (Ward) form, the principal part at
// the dominant pole x = 1/k, and fixed-k asymptotics.

#include "blockpoly/numeric.hpp"
#include "blockpoly/polynomials.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blockpoly {

/// numerator/denominator over Z with gcd 1, no common integer content and a
/// positive leading denominator coefficient.
class RatFunc {
 public:
  RatFunc(IntPoly numerator, IntPoly denominator);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  RatFunc derivative() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

/// f_1 = x^2/(1 - x), f_k = x^2/(1 - kx) (x f_{k-1})'. Memoized per k.
RatFunc f_k(std::size_t k);

struct WardForm {
  std::size_t k = 0;
  IntPoly p_k;
  /// (j, exponent) for the factor (jx - 1)^exponent, exponent = k + 1 - j.
  std::vector<std::pair<std::size_t, std::size_t>> denominator_factors;
  std::size_t leading_monomial_power = 0;  // 2k
};

class WardFormMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits f_k = x^{2k} p_k(x) / prod_j (jx - 1)^{k+1-j}; throws
/// WardFormMismatch if the denominator or the x^{2k} factor is not as
/// stated or deg p_k != k(k-1)/2.
WardForm ward_form(std::size_t k);
RatFunc reassemble(const WardForm& w);

/// Coefficient of x^n in the Maclaurin series; throws std::domain_error if
/// the denominator vanishes at 0.
Ratio series_coeff(const RatFunc& f, std::size_t n);
/// Coefficients 0..n.
std::vector<Ratio> series_prefix(const RatFunc& f, std::size_t n);

class PoleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// -1/(k k! (x - 1/k)) = -1/(k!(kx - 1)), after checking that 1/k is a simple
/// pole of f_k with exactly that residue (PoleMismatch otherwise).
RatFunc principal_part(std::size_t k);

struct AsymptoticErrorReport {
  std::size_t k = 0;
  std::size_t n_lo = 0, n_hi = 0;
  double eps = 0;
  /// |D(n,k) - k^n/k!| / (k-1+eps)^n for n = n_lo..n_hi.
  std::vector<double> normalized_errors;
  /// D(n,k) k!/k^n for the same n.
  std::vector<double> ratios;
  double max_error = 0;
  /// max over the last ten n does not exceed the max over the earlier ones.
  bool bounded = false;
  bool skipped = false;
};

AsymptoticErrorReport asymptotic_error_check(std::size_t k, std::size_t n_lo, std::size_t n_hi, double eps);

struct PeakAsymptoticReport {
  std::size_t n = 0;
  std::size_t d_argmax = 0;         // K*_n, first peak of D(n,.)
  std::size_t stirling_argmax = 0;  // K(n), first peak of S(n,.)
  double log_ratio = 0;             // K*_n log(n) / n
  double lambert_approx = 0;        // (n - 1/2)/W(n - 1/2)
  double stirling_approx = 0;       // e^r - 1, r e^r = n
};

PeakAsymptoticReport verify_peak_asymptotic(std::size_t n);

/// {"num": [...], "den": [...]}, decimal strings lowest degree first.
std::string to_json(const RatFunc& f);
/// Adds {"factors": [[j, exp], ...], "p_k": [...]}.
std::string to_json(const WardForm& w);

/// "x^4(2x - 3)/((x - 1)^2(2x - 1))"-style rendering of the Ward form.
std::string render(const WardForm& w);

}  // namespace blockpoly
