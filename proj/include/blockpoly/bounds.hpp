#pragma once

// Laguerre-Samuelson bounds on the leftmost zero of D_n(x), compared with
// the certified leftmost root.

#include "blockpoly/numeric.hpp"
#include "blockpoly/polynomials.hpp"
#include "blockpoly/real_roots.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blockpoly {

struct SamuelsonInterval {
  double x_minus = 0;
  double x_plus = 0;
  /// Exact intermediates of the monic form x^d + a1 x^{d-1} + a2 x^{d-2} + ...
  Ratio a1;
  Ratio a2;
  /// a1^2 - 2d/(d-1) a2, the exact radicand.
  Ratio radicand;
};

/// x_pm = -a1/d pm (d-1)/d sqrt(a1^2 - 2d/(d-1) a2) for a polynomial of degree
/// d >= 2. Throws std::invalid_argument for degree < 2 and std::logic_error
/// for a negative radicand.
SamuelsonInterval samuelson_interval(const IntPoly& p);

struct SamuelsonReport {
  std::size_t n = 0;
  Ratio a1;
  Ratio a2;
  double x_minus = 0;
  double x_plus = 0;
  RootBracket z_star_bracket;
  double z_star_approx = 0;
  /// |x_minus| / |z*|.
  double estimate_over_actual = 0;
  /// a1 = D(n, d-1)/D(n, d) and a2 = D(n, d-2)/D(n, d) with d = floor(n/2).
  bool coefficient_ratios_ok = false;
  /// x_minus <= z*, decided exactly against the certified bracket.
  bool dominates = false;
};

/// n >= 4. The leftmost root of D_n is refined to relative width eps.
SamuelsonReport samuelson_vs_actual(std::size_t n, const Ratio& eps);

/// Closed form n!/(2^{n/2} (n/2)!) for even n and
/// C(n,3) (n-3)!/(2^{(n-3)/2} ((n-3)/2)!) for odd n. Throws for n < 2.
Count special_value_max_k(std::size_t n);

/// x_minus(D_n) / n^3, n >= 10.
double samuelson_scaling(std::size_t n);

/// -1/(36 sqrt 6) and -1/(108 sqrt 10).
double samuelson_scaling_limit_even();
double samuelson_scaling_limit_odd();

struct ScalingRow {
  std::size_t n = 0;
  bool even = false;
  double x_minus = 0;
  double z_star = 0;
  double ratio = 0;  // z*/n^3
};

struct ScalingFit {
  bool even = false;
  /// ratio ~ -c + b/n by least squares; absent for fewer than two points.
  std::optional<double> c;
  std::optional<double> b;
  std::vector<double> residuals;
};

struct ScalingProbe {
  std::vector<ScalingRow> rows;
  std::vector<ScalingFit> fits;
};

/// z*_n / n^3 per n (every n >= 10) and a per-parity fit. Report only.
ScalingProbe leftmost_scaling_probe(const std::vector<std::size_t>& ns, const Ratio& eps);

/// `n,parity,x_minus,z_star,ratio` with a header row.
void write_scaling_csv(std::ostream& out, const ScalingProbe& probe);

std::string to_json(const SamuelsonReport& r);

}  // namespace blockpoly
