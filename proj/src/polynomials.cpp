#include "blockpoly/polynomials.hpp"

#include <json.hpp>

#include <stdexcept>

namespace blockpoly {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Ratio> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

template <class Coeff>
static Ratio horner(const Poly<Coeff>& p, const Ratio& x) {
  Ratio acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Ratio(*it);
  return acc;
}

Ratio eval_rational(const IntPoly& p, const Ratio& x) { return horner(p, x); }
Ratio eval_rational(const RatPoly& p, const Ratio& x) { return horner(p, x); }

int sign_at(const IntPoly& p, const Ratio& x) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  Int acc = c.back();
  Int den_power = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    den_power *= den;
    acc *= num;
    if (c[i] != 0) acc += c[i] * den_power;
  }
  return sgn(acc);
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Ratio> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Ratio> quot(rem.size() - db);
  const Ratio& lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Ratio factor = rem[i] / lead;
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Int> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Int> quot(rem.size() - db);
  const Int& lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Int factor = rem[i] / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coeffs()[j];
    quot[i - db] = std::move(factor);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(quot));
}

Int content(const IntPoly& p) {
  Int g;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int g = content(p);
  if (g == 1) return p;
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const long delta = a.degree() - b.degree();
  const Int scale = ::abs(b.leading());
  const int lead_sign = sgn(b.leading());
  std::vector<Int> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  long steps = 0;
  while (r.size() > db && !r.empty()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const std::size_t shift = r.size() - 1 - db;
    Int factor = r.back();
    if (lead_sign < 0) factor = -factor;
    for (auto& v : r) v *= scale;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= factor * b.coeffs()[j];
    r.pop_back();
    ++steps;
  }
  IntPoly out(std::move(r));
  for (long i = steps; i < delta + 1; ++i) out *= scale;
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(signed_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && x.leading() < 0) x = -x;
  return x;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Int& c = p.coeffs()[i];
    if (c == 0) continue;
    Int mag = ::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str(10);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : p.coeffs()) arr.push_back(v.get_str(10));
  return arr.dump();
}

IntPoly int_poly_from_json(const std::string& json) {
  auto arr = nlohmann::json::parse(json);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Int> c;
  for (const auto& v : arr) {
    if (!v.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    c.push_back(parse_int(v.get<std::string>()));
  }
  return IntPoly(std::move(c));
}

IntPoly row_poly(const Row& row) { return IntPoly(row); }

IntPoly d_poly(std::size_t n) { return row_poly(triangle_row(TriangleKind::d(), n)); }

IntPoly c_poly(std::size_t n) {
  IntPoly out = IntPoly::constant(Int(1));
  for (std::size_t j = 0; j < n; ++j) out = out * IntPoly{Int(static_cast<unsigned long>(j)), Int(1)};
  return out;
}

IntPoly s_poly(std::size_t n) { return row_poly(triangle_row(TriangleKind::s(), n)); }

IntPoly dr_poly(std::size_t n, unsigned r) { return row_poly(triangle_row(TriangleKind::dr(r), n)); }

IntPoly derivative(const IntPoly& p) { return p.derivative(); }

bool check_functional_recurrence(std::size_t n) {
  if (n < 3) throw std::invalid_argument("functional recurrence needs n >= 3");
  IntPoly rhs = d_poly(n - 1).derivative() + d_poly(n - 2) * Int(static_cast<unsigned long>(n - 1));
  return d_poly(n) == rhs.shifted(1);
}

}  // namespace blockpoly
