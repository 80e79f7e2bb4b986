#pragma once

// Prime congruences, binomial-transform identities, EGF cross-checks and the
// Bell/D inversion pair.

#include "blockpoly/numeric.hpp"
#include "blockpoly/triangle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockpoly {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

class NotPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row n of a triangle reduced mod p by running the recurrence on residues.
std::vector<std::uint64_t> residue_row(TriangleKind kind, std::size_t n, std::uint64_t p);

enum class CongruenceKind { RowDivisibility, DTotal, Bell };

struct CongruenceCertificate {
  std::uint64_t p = 0;
  CongruenceKind kind = CongruenceKind::RowDivisibility;
  /// "D" or "S" for row divisibility, empty otherwise.
  std::string triangle;
  /// (k, residue) for row divisibility; (p, residue) for the totals.
  std::vector<std::pair<std::size_t, std::uint64_t>> witnesses;
  bool verified = false;
};

/// D(p,k) = 0 and S(p,k) = 0 mod p for 1 < k < p; one certificate each.
/// Throws NotPrime for composite p.
std::vector<CongruenceCertificate> check_prime_row_divisibility(std::uint64_t p);
/// D_p = 1 mod p.
CongruenceCertificate check_d_total_congruence(std::uint64_t p);
/// B(p) = 2 mod p for odd primes p; p = 2 is rejected.
CongruenceCertificate check_bell_congruence(std::uint64_t p);

/// The same checks on caller-supplied values, used for negative controls.
CongruenceCertificate verify_row_divisibility(std::uint64_t p, const Row& row, const std::string& triangle);
CongruenceCertificate verify_total_congruence(std::uint64_t p, const Count& total, CongruenceKind kind);

std::string to_json(const CongruenceCertificate& c);
std::string to_string(CongruenceKind kind);

/// sum_{s=n-k}^{n} C(n,s) (-1)^{n-s} S(s, s+k-n), which equals D(n,k).
/// Throws std::logic_error if the sum comes out negative.
Count binomial_transform_d(std::size_t n, std::size_t k);

/// D_m(n,k) from D_{m-1} by inclusion-exclusion over blocks of size exactly
/// m-1: sum_j (-1)^j n!/((m-1)!^j j! (n-j(m-1))!) D_{m-1}(n-j(m-1), k-j).
/// m >= 2.
Count binomial_transform_dm(std::size_t n, std::size_t k, unsigned m);

/// Coefficients 0..N of (e^x - 1 - x)^k / k!.
std::vector<Ratio> egf_prefix(std::size_t k, std::size_t N);
/// Coefficients 0..N of exp(e^x - 1 - x).
std::vector<Ratio> egf_d_total_prefix(std::size_t N);

struct BellInversionReport {
  std::size_t n = 0;
  bool d_from_bell = false;  // D_n = sum_j C(n,j) (-1)^j B(n-j)
  bool bell_from_d = false;  // B(n) = sum_j C(n,j) D_j
};

BellInversionReport bell_d_inversion(std::size_t n);
/// Same identities against caller-supplied sequences B(0..n), D(0..n).
BellInversionReport bell_d_inversion(std::size_t n, const std::vector<Count>& bell_values,
                                     const std::vector<Count>& d_values);

}  // namespace blockpoly
