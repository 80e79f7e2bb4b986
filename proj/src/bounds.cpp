#include "blockpoly/bounds.hpp"

#include "blockpoly/triangle.hpp"

#include <json.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace blockpoly {

namespace {

constexpr unsigned kSqrtBits = 256;

double to_double(const mpf_class& v) { return v.get_d(); }

}  // namespace

SamuelsonInterval samuelson_interval(const IntPoly& p) {
  const long d = p.degree();
  if (d < 2) throw std::invalid_argument("samuelson_interval needs degree >= 2");
  SamuelsonInterval out;
  const Ratio lead(p.leading());
  out.a1 = Ratio(p.coeff(static_cast<std::size_t>(d - 1))) / lead;
  out.a2 = Ratio(p.coeff(static_cast<std::size_t>(d - 2))) / lead;
  out.radicand = out.a1 * out.a1 - make_ratio(2 * d, d - 1) * out.a2;
  if (out.radicand < 0) throw std::logic_error("negative Samuelson radicand: polynomial is not real-rooted");
  const mpf_class root = sqrt(mpf_class(out.radicand, kSqrtBits));
  const mpf_class centre(Ratio(-out.a1 / d), kSqrtBits);
  const mpf_class half_width = mpf_class(make_ratio(d - 1, d), kSqrtBits) * root;
  out.x_minus = to_double(mpf_class(centre - half_width, kSqrtBits));
  out.x_plus = to_double(mpf_class(centre + half_width, kSqrtBits));
  return out;
}

namespace {

// x_minus = -a1/d - ((d-1)/d) sqrt(R) <= t, decided exactly.
bool samuelson_left_at_most(const SamuelsonInterval& s, std::size_t d, const Ratio& t) {
  const Ratio shifted = t + s.a1 / Ratio(static_cast<long>(d));
  if (shifted >= 0) return true;
  const Ratio w = make_ratio(static_cast<long>(d - 1), static_cast<long>(d));
  return shifted * shifted <= w * w * s.radicand;
}

std::optional<Ratio> exact_sqrt(const Ratio& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Int num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  return make_ratio(num, den);
}

bool samuelson_dominates(const SamuelsonInterval& s, std::size_t d, const IntPoly& p, RootBracket b) {
  if (const auto root = exact_sqrt(s.radicand)) {
    const Ratio x = -s.a1 / Ratio(static_cast<long>(d)) - make_ratio(static_cast<long>(d - 1), static_cast<long>(d)) * *root;
    if ((b.contains(x) || x == b.hi) && sign_at(p, x) == 0) return true;
  }
  for (int step = 0; step < 256; ++step) {
    if (samuelson_left_at_most(s, d, b.lo)) return true;
    if (!samuelson_left_at_most(s, d, b.hi)) return false;
    if (b.lo == b.hi) return false;
    b = bisect(b, p);
  }
  return false;
}

}  // namespace

SamuelsonReport samuelson_vs_actual(std::size_t n, const Ratio& eps) {
  if (n < 4) throw std::invalid_argument("samuelson_vs_actual needs n >= 4");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  SamuelsonReport out;
  out.n = n;
  const IntPoly p = d_poly(n);
  const SamuelsonInterval s = samuelson_interval(p);
  out.a1 = s.a1;
  out.a2 = s.a2;
  out.x_minus = s.x_minus;
  out.x_plus = s.x_plus;

  const std::size_t d = n / 2;
  const Count top = d_count(n, d);
  out.coefficient_ratios_ok = out.a1 * top == Ratio(d_count(n, d - 1)) && out.a2 * top == Ratio(d_count(n, d - 2));

  const auto brackets = d_poly_roots(n);
  out.z_star_bracket = refine_relative(brackets.back(), p, eps);
  out.z_star_approx = out.z_star_bracket.approx();
  out.estimate_over_actual = std::abs(out.x_minus) / std::abs(out.z_star_approx);
  out.dominates = samuelson_dominates(s, d, p, out.z_star_bracket);
  return out;
}

Count special_value_max_k(std::size_t n) {
  if (n < 2) throw std::invalid_argument("special_value_max_k needs n >= 2");
  if (n % 2 == 0) {
    Count power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, n / 2);
    return factorial(n) / (power * factorial(n / 2));
  }
  if (n < 3) throw std::invalid_argument("odd special value needs n >= 3");
  const std::size_t m = (n - 3) / 2;
  Count power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, m);
  return binomial(n, 3) * factorial(n - 3) / (power * factorial(m));
}

double samuelson_scaling(std::size_t n) {
  if (n < 10) throw std::invalid_argument("samuelson_scaling needs n >= 10");
  const double cube = std::pow(static_cast<double>(n), 3);
  return samuelson_interval(d_poly(n)).x_minus / cube;
}

double samuelson_scaling_limit_even() { return -1 / (36 * std::sqrt(6.0)); }
double samuelson_scaling_limit_odd() { return -1 / (108 * std::sqrt(10.0)); }

ScalingProbe leftmost_scaling_probe(const std::vector<std::size_t>& ns, const Ratio& eps) {
  ScalingProbe probe;
  for (auto n : ns) {
    if (n < 10) throw std::invalid_argument("leftmost_scaling_probe needs n >= 10");
    const SamuelsonReport r = samuelson_vs_actual(n, eps);
    const double cube = std::pow(static_cast<double>(n), 3);
    probe.rows.push_back({n, n % 2 == 0, r.x_minus, r.z_star_approx, r.z_star_approx / cube});
  }
  for (bool even : {true, false}) {
    std::vector<const ScalingRow*> rows;
    for (const auto& row : probe.rows)
      if (row.even == even) rows.push_back(&row);
    if (rows.empty()) continue;
    ScalingFit fit;
    fit.even = even;
    if (rows.size() >= 2) {
      // Least squares for ratio = a + b t with t = 1/n.
      double st = 0, sy = 0, stt = 0, sty = 0;
      for (const auto* row : rows) {
        const double t = 1.0 / static_cast<double>(row->n);
        st += t;
        sy += row->ratio;
        stt += t * t;
        sty += t * row->ratio;
      }
      const double m = static_cast<double>(rows.size());
      const double b = (m * sty - st * sy) / (m * stt - st * st);
      const double a = (sy - b * st) / m;
      fit.c = -a;
      fit.b = b;
      for (const auto* row : rows) fit.residuals.push_back(row->ratio - (a + b / static_cast<double>(row->n)));
    }
    probe.fits.push_back(std::move(fit));
  }
  return probe;
}

void write_scaling_csv(std::ostream& out, const ScalingProbe& probe) {
  out << "n,parity,x_minus,z_star,ratio\n";
  for (const auto& row : probe.rows)
    out << row.n << ',' << (row.even ? "even" : "odd") << ',' << format_double(row.x_minus) << ','
        << format_double(row.z_star) << ',' << format_double(row.ratio) << '\n';
}

std::string to_json(const SamuelsonReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["a1"] = to_string(r.a1);
  j["a2"] = to_string(r.a2);
  j["x_minus"] = r.x_minus;
  j["x_plus"] = r.x_plus;
  j["z_star"] = {{"lo", to_string(r.z_star_bracket.lo)},
                 {"hi", to_string(r.z_star_bracket.hi)},
                 {"approx", r.z_star_approx}};
  j["estimate_over_actual"] = r.estimate_over_actual;
  j["coefficient_ratios_ok"] = r.coefficient_ratios_ok;
  j["dominates"] = r.dominates;
  return j.dump();
}

}  // namespace blockpoly
