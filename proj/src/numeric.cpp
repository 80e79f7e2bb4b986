#include "blockpoly/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace blockpoly {

Ratio make_ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

Ratio make_ratio(long num, long den) { return make_ratio(Int(num), Int(den)); }

Count binomial(unsigned long n, unsigned long k) {
  Count out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Count factorial(unsigned long n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("malformed integer: " + std::string(text));
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

Ratio parse_ratio(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return make_ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

  long exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_int(text.substr(e + 1)).get_si();
    mantissa = text.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '-' || mantissa[i] == '+')) {
    negative = mantissa[i] == '-';
    ++i;
  }
  bool seen_point = false;
  for (; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed rational: " + std::string(text));
  Int num(digits, 10);
  if (negative) num = -num;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_ratio(num, scale) : make_ratio(num * scale, Int(1));
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Ratio& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_str(10);
}

double to_double(const Ratio& v) {
  if (v == 0) return 0;
  Int a = v.get_num();
  const Int& b = v.get_den();
  const bool negative = a < 0;
  if (negative) a = -a;
  // q = floor(a 2^k / b) carries 64 or 65 bits; round it to 53 with the
  // remainder as sticky bit.
  const long k = 64 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                       static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  Int num = a, den = b;
  if (k >= 0)
    num <<= static_cast<mp_bitcnt_t>(k);
  else
    den <<= static_cast<mp_bitcnt_t>(-k);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const long drop = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 53;
  Int mant = q >> static_cast<mp_bitcnt_t>(drop);
  Int low = q - (mant << static_cast<mp_bitcnt_t>(drop));
  const Int half = Int(1) << static_cast<mp_bitcnt_t>(drop - 1);
  if (low > half || (low == half && (r != 0 || mpz_odd_p(mant.get_mpz_t())))) mant += 1;
  const double out = std::ldexp(mant.get_d(), static_cast<int>(drop - k));
  return negative ? -out : out;
}

double to_double(const Int& v) { return to_double(Ratio(v)); }

std::string format_double(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

int sign(const Int& v) { return sgn(v); }
int sign(const Ratio& v) { return sgn(v); }

Ratio abs(const Ratio& v) { return v < 0 ? Ratio(-v) : v; }

}  // namespace blockpoly
