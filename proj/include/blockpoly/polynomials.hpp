#pragma once

// Dense univariate polynomials with exact coefficients, and the horizontal
// generating polynomials of the counting triangles.

#include "blockpoly/numeric.hpp"
#include "blockpoly/triangle.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace blockpoly {

/// Coefficient i multiplies x^i. The highest stored coefficient is nonzero
/// unless the polynomial is zero, in which case nothing is stored.
template <class Coeff>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Coeff v) { return Poly(std::vector<Coeff>{std::move(v)}); }
  static Poly monomial(Coeff v, std::size_t power) {
    std::vector<Coeff> c(power + 1);
    c[power] = std::move(v);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i, zero beyond the degree.
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
  }

  /// Multiplication by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> out(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Coeff& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Ratio>;

RatPoly to_rat(const IntPoly& p);

/// Exact value p(x) by Horner's rule over the rationals.
Ratio eval_rational(const IntPoly& p, const Ratio& x);
Ratio eval_rational(const RatPoly& p, const Ratio& x);

/// Sign of p(x) without forming the rational value: evaluates the
/// homogenized integer form den^deg * p(num/den).
int sign_at(const IntPoly& p, const Ratio& x);

/// Euclidean division over Q; throws std::domain_error for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Exact quotient a/b over Z; throws std::domain_error unless b divides a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Gcd of the coefficients (non-negative; zero for the zero polynomial).
Int content(const IntPoly& p);
/// p divided by its content, with the sign of the leading coefficient kept.
IntPoly primitive_part(const IntPoly& p);

/// Monic gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient (the zero polynomial when both inputs are zero).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder scaled by |lc(b)|^(deg a - deg b + 1), so it is a
/// positive multiple of the true remainder.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Human-readable form, highest degree first: "15x^3 + 25x^2 + x".
std::string to_string(const IntPoly& p);
/// JSON array of decimal coefficient strings, lowest degree first.
std::string to_json(const IntPoly& p);
IntPoly int_poly_from_json(const std::string& json);

IntPoly row_poly(const Row& row);

/// D_n(x) = sum_k D(n,k) x^k, n >= 1.
IntPoly d_poly(std::size_t n);
/// C_n(x) = x(x+1)...(x+n-1), expanded by multiplication (not from the
/// triangle), n >= 1.
IntPoly c_poly(std::size_t n);
IntPoly s_poly(std::size_t n);
IntPoly dr_poly(std::size_t n, unsigned r);
IntPoly derivative(const IntPoly& p);

/// D_n(x) == x (D_{n-1}'(x) + (n-1) D_{n-2}(x)) coefficientwise, n >= 3.
bool check_functional_recurrence(std::size_t n);

}  // namespace blockpoly
