#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blockpoly {

/// Arbitrary-precision integer. Triangle entries and totals are non-negative
/// by construction; intermediate alternating sums may be signed.
using Int = mpz_class;
using Count = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Ratio = mpq_class;

Ratio make_ratio(const Int& num, const Int& den);
Ratio make_ratio(long num, long den = 1);

Count binomial(unsigned long n, unsigned long k);
Count factorial(unsigned long n);

/// Parses "a", "a/b", "-a/b", decimal "0.125" or scientific "1e-3" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Ratio parse_ratio(std::string_view text);

/// Parses a decimal integer (optional leading '-'). Throws on malformed input.
Int parse_int(std::string_view text);

std::string to_string(const Int& v);
std::string to_string(const Ratio& v);

/// Nearest binary64 to an exact rational (correct rounding up to ties).
double to_double(const Ratio& v);
double to_double(const Int& v);

/// binary64 rendering with 17 significant digits, used in every
/// approximation field of the text/JSON/CSV output.
std::string format_double(double v, int significant = 17);

int sign(const Int& v);
int sign(const Ratio& v);

Ratio abs(const Ratio& v);

}  // namespace blockpoly
