#include "blockpoly/ogf.hpp"

#include "blockpoly/peaks.hpp"
#include "blockpoly/triangle.hpp"

#include <json.hpp>

#include <cmath>
#include <mutex>

namespace blockpoly {

RatFunc::RatFunc(IntPoly numerator, IntPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly::constant(Int(1));
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  Int c;
  mpz_gcd(c.get_mpz_t(), content(num_).get_mpz_t(), content(den_).get_mpz_t());
  if (c != 1) {
    num_ = exact_quotient(num_, IntPoly::constant(c));
    den_ = exact_quotient(den_, IntPoly::constant(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

namespace {

IntPoly linear(long constant, long slope) { return IntPoly{Int(constant), Int(slope)}; }

class OgfMemo {
 public:
  RatFunc get(std::size_t k) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.emplace_back(IntPoly::monomial(Int(1), 2), linear(1, -1));
    while (values_.size() < k) {
      const std::size_t next = values_.size() + 1;
      const RatFunc& prev = values_.back();
      RatFunc shifted(prev.numerator().shifted(1), prev.denominator());
      RatFunc factor(IntPoly::monomial(Int(1), 2), linear(1, -static_cast<long>(next)));
      values_.push_back(factor * shifted.derivative());
    }
    return values_[k - 1];
  }

 private:
  std::mutex mutex_;
  std::vector<RatFunc> values_;
};

OgfMemo& ogf_memo() {
  static OgfMemo memo;
  return memo;
}

}  // namespace

RatFunc f_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("f_k needs k >= 1");
  return ogf_memo().get(k);
}

WardForm ward_form(std::size_t k) {
  const RatFunc f = f_k(k);
  WardForm w;
  w.k = k;
  w.leading_monomial_power = 2 * k;
  IntPoly expected_den = IntPoly::constant(Int(1));
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t exponent = k + 1 - j;
    w.denominator_factors.emplace_back(j, exponent);
    for (std::size_t e = 0; e < exponent; ++e) expected_den = expected_den * linear(-1, static_cast<long>(j));
  }
  if (f.denominator() != expected_den)
    throw WardFormMismatch("denominator of f_" + std::to_string(k) + " is not prod (jx-1)^(k+1-j)");
  const auto& num = f.numerator().coeffs();
  for (std::size_t i = 0; i < 2 * k && i < num.size(); ++i)
    if (num[i] != 0) throw WardFormMismatch("numerator of f_" + std::to_string(k) + " lacks the factor x^2k");
  w.p_k = IntPoly(std::vector<Int>(num.begin() + static_cast<long>(std::min(2 * k, num.size())), num.end()));
  if (w.p_k.degree() != static_cast<long>(k * (k - 1) / 2))
    throw WardFormMismatch("deg p_" + std::to_string(k) + " = " + std::to_string(w.p_k.degree()) +
                           ", expected " + std::to_string(k * (k - 1) / 2));
  return w;
}

RatFunc reassemble(const WardForm& w) {
  IntPoly den = IntPoly::constant(Int(1));
  for (const auto& [j, exponent] : w.denominator_factors)
    for (std::size_t e = 0; e < exponent; ++e) den = den * linear(-1, static_cast<long>(j));
  return RatFunc(w.p_k.shifted(w.leading_monomial_power), den);
}

std::vector<Ratio> series_prefix(const RatFunc& f, std::size_t n) {
  const auto& den = f.denominator();
  const auto& num = f.numerator();
  if (den.coeff(0) == 0) throw std::domain_error("series expansion needs a denominator nonzero at 0");
  const Ratio d0(den.coeff(0));
  std::vector<Ratio> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Ratio acc(num.coeff(i));
    const std::size_t reach = std::min<std::size_t>(i, den.size() - 1);
    for (std::size_t j = 1; j <= reach; ++j) acc -= Ratio(den.coeffs()[j]) * a[i - j];
    a[i] = acc / d0;
  }
  return a;
}

Ratio series_coeff(const RatFunc& f, std::size_t n) { return series_prefix(f, n).back(); }

RatFunc principal_part(std::size_t k) {
  if (k == 0) throw std::invalid_argument("principal_part needs k >= 1");
  const RatFunc f = f_k(k);
  const Ratio pole = make_ratio(1, static_cast<long>(k));
  const IntPoly& den = f.denominator();
  if (eval_rational(den, pole) != 0) throw PoleMismatch("1/k is not a pole of f_k");
  const Ratio den_slope = eval_rational(den.derivative(), pole);
  if (den_slope == 0) throw PoleMismatch("1/k is not a simple pole of f_k");
  const Ratio num_value = eval_rational(f.numerator(), pole);
  if (num_value == 0) throw PoleMismatch("numerator of f_k vanishes at 1/k");
  const Count k_fact = factorial(k);
  const Ratio residue = num_value / den_slope;
  if (residue != Ratio(-1) / Ratio(k_fact * static_cast<unsigned long>(k)))
    throw PoleMismatch("residue of f_" + std::to_string(k) + " at 1/k is " + to_string(residue));
  // -1/(k k! (x - 1/k)) = -1/(k! (kx - 1))
  return RatFunc(IntPoly::constant(Int(-1)), IntPoly{Int(-k_fact), Int(k_fact * static_cast<unsigned long>(k))});
}

AsymptoticErrorReport asymptotic_error_check(std::size_t k, std::size_t n_lo, std::size_t n_hi, double eps) {
  AsymptoticErrorReport out;
  out.k = k;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.eps = eps;
  if (k < 2) {
    out.skipped = true;
    out.bounded = true;
    return out;
  }
  if (n_hi < n_lo || !(eps > 0)) throw std::invalid_argument("asymptotic_error_check needs n_lo <= n_hi, eps > 0");
  const Count k_fact = factorial(k);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    Count power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n);
    const Count scaled = d_count(n, k) * k_fact;
    const Ratio error = make_ratio(::abs(Int(scaled - power)), k_fact);
    const double normalized = to_double(error) / std::pow(static_cast<double>(k) - 1 + eps, static_cast<double>(n));
    out.normalized_errors.push_back(normalized);
    out.ratios.push_back(to_double(make_ratio(scaled, power)));
    out.max_error = std::max(out.max_error, normalized);
  }
  const auto& e = out.normalized_errors;
  const std::size_t tail = e.size() > 10 ? 10 : e.size() / 2;
  const double head_max = *std::max_element(e.begin(), e.end() - static_cast<long>(tail));
  const double tail_max = tail == 0 ? 0 : *std::max_element(e.end() - static_cast<long>(tail), e.end());
  out.bounded = std::isfinite(out.max_error) && tail_max <= head_max;
  return out;
}

PeakAsymptoticReport verify_peak_asymptotic(std::size_t n) {
  if (n < 10) throw std::invalid_argument("peak asymptotics are reported for n >= 10");
  PeakAsymptoticReport out;
  out.n = n;
  out.d_argmax = argmax_indices(triangle_row(TriangleKind::d(), n)).front();
  out.stirling_argmax = argmax_indices(triangle_row(TriangleKind::s(), n)).front();
  out.log_ratio = static_cast<double>(out.d_argmax) * std::log(static_cast<double>(n)) / static_cast<double>(n);
  out.lambert_approx = peak_approx_lambert(static_cast<double>(n));
  out.stirling_approx = stirling_peak_approx(static_cast<double>(n));
  return out;
}

namespace {

nlohmann::json coeff_array(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str(10));
  return arr;
}

}  // namespace

std::string to_json(const RatFunc& f) {
  return nlohmann::json{{"num", coeff_array(f.numerator())}, {"den", coeff_array(f.denominator())}}.dump();
}

std::string to_json(const WardForm& w) {
  const RatFunc f = reassemble(w);
  nlohmann::json j{{"num", coeff_array(f.numerator())}, {"den", coeff_array(f.denominator())}};
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [jj, e] : w.denominator_factors) factors.push_back({jj, e});
  j["factors"] = factors;
  j["p_k"] = coeff_array(w.p_k);
  return j.dump();
}

std::string render(const WardForm& w) {
  std::string out = "x^" + std::to_string(w.leading_monomial_power) + "(" + to_string(w.p_k) + ")/(";
  for (const auto& [j, e] : w.denominator_factors) {
    out += "(" + (j == 1 ? std::string("x") : std::to_string(j) + "x") + " - 1)";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out + ")";
}

}  // namespace blockpoly
