#include "blockpoly/modular.hpp"

#include <json.hpp>

#include <algorithm>

namespace blockpoly {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
}

std::uint64_t mod_of(const Count& v, std::uint64_t p) {
  Count r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> residue_row(TriangleKind kind, std::size_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  if (kind.family != Family::D && kind.family != Family::S && kind.family != Family::C)
    throw std::invalid_argument("residue rows are available for D, S and C");
  std::vector<std::uint64_t> older, prev{1 % p};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> cur(kind.max_k(m) + 1, 0);
    auto at = [](const std::vector<std::uint64_t>& row, std::size_t k) { return k < row.size() ? row[k] : 0; };
    for (std::size_t k = 1; k < cur.size(); ++k) {
      switch (kind.family) {
        case Family::D:
          cur[k] = add_mod(mul_mod(k % p, at(prev, k), p), m >= 2 ? mul_mod((m - 1) % p, at(older, k - 1), p) : 0, p);
          break;
        case Family::S:
          cur[k] = add_mod(mul_mod(k % p, at(prev, k), p), at(prev, k - 1), p);
          break;
        default:
          cur[k] = add_mod(mul_mod((m - 1) % p, at(prev, k), p), at(prev, k - 1), p);
          break;
      }
    }
    older = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

namespace {

CongruenceCertificate divisibility_from_residues(std::uint64_t p, const std::vector<std::uint64_t>& residues,
                                                 const std::string& triangle) {
  CongruenceCertificate c;
  c.p = p;
  c.kind = CongruenceKind::RowDivisibility;
  c.triangle = triangle;
  c.verified = true;
  for (std::size_t k = 2; k < p; ++k) {
    const std::uint64_t r = k < residues.size() ? residues[k] : 0;
    c.witnesses.emplace_back(k, r);
    if (r != 0) c.verified = false;
  }
  return c;
}

CongruenceCertificate total_from_residue(std::uint64_t p, std::uint64_t residue, CongruenceKind kind) {
  CongruenceCertificate c;
  c.p = p;
  c.kind = kind;
  c.witnesses.emplace_back(p, residue);
  c.verified = residue == (kind == CongruenceKind::Bell ? 2 % p : 1 % p);
  return c;
}

std::uint64_t residue_sum(const std::vector<std::uint64_t>& row, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto v : row) acc = add_mod(acc, v, p);
  return acc;
}

}  // namespace

std::vector<CongruenceCertificate> check_prime_row_divisibility(std::uint64_t p) {
  require_prime(p);
  return {divisibility_from_residues(p, residue_row(TriangleKind::d(), p, p), "D"),
          divisibility_from_residues(p, residue_row(TriangleKind::s(), p, p), "S")};
}

CongruenceCertificate check_d_total_congruence(std::uint64_t p) {
  require_prime(p);
  return total_from_residue(p, residue_sum(residue_row(TriangleKind::d(), p, p), p), CongruenceKind::DTotal);
}

CongruenceCertificate check_bell_congruence(std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("B(p) = 2 mod p is stated for odd primes");
  return total_from_residue(p, residue_sum(residue_row(TriangleKind::s(), p, p), p), CongruenceKind::Bell);
}

CongruenceCertificate verify_row_divisibility(std::uint64_t p, const Row& row, const std::string& triangle) {
  require_prime(p);
  std::vector<std::uint64_t> residues;
  for (const auto& v : row) residues.push_back(mod_of(v, p));
  return divisibility_from_residues(p, residues, triangle);
}

CongruenceCertificate verify_total_congruence(std::uint64_t p, const Count& total, CongruenceKind kind) {
  require_prime(p);
  if (kind == CongruenceKind::RowDivisibility) throw std::invalid_argument("not a total congruence");
  return total_from_residue(p, mod_of(total, p), kind);
}

std::string to_string(CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::RowDivisibility:
      return "row_divisibility";
    case CongruenceKind::DTotal:
      return "d_total";
    case CongruenceKind::Bell:
      return "bell";
  }
  return "";
}

std::string to_json(const CongruenceCertificate& c) {
  nlohmann::json j;
  j["p"] = c.p;
  j["kind"] = to_string(c.kind);
  if (!c.triangle.empty()) j["triangle"] = c.triangle;
  j["verified"] = c.verified;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& [k, r] : c.witnesses) w.push_back({k, r});
  j["witnesses"] = w;
  return j.dump();
}

Count binomial_transform_d(std::size_t n, std::size_t k) {
  Int acc;
  const std::size_t s_lo = k >= n ? 0 : n - k;
  for (std::size_t s = s_lo; s <= n; ++s) {
    const std::size_t second = s + k - n;  // s >= n - k, so no underflow
    Int term = binomial(n, s) * stirling2(s, second);
    if ((n - s) % 2 == 1) term = -term;
    acc += term;
  }
  if (acc < 0) throw std::logic_error("binomial transform came out negative");
  return acc;
}

Count binomial_transform_dm(std::size_t n, std::size_t k, unsigned m) {
  if (m < 2) throw std::invalid_argument("binomial_transform_dm needs m >= 2");
  const std::size_t size = m - 1;
  const Count block_fact = factorial(size);
  const Count n_fact = factorial(n);
  Int acc;
  Count block_power = 1;
  for (std::size_t j = 0; j <= k && j * size <= n; ++j) {
    const std::size_t rest = n - j * size;
    Int term = n_fact / (block_power * factorial(j) * factorial(rest)) * d_m_block(rest, k - j, m - 1);
    if (j % 2 == 1) term = -term;
    acc += term;
    block_power *= block_fact;
  }
  if (acc < 0) throw std::logic_error("inclusion-exclusion for D_m came out negative");
  return acc;
}

namespace {

std::vector<Ratio> truncated_product(const std::vector<Ratio>& a, const std::vector<Ratio>& b, std::size_t N) {
  std::vector<Ratio> out(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Ratio> exp_minus_one_minus_x(std::size_t N) {
  std::vector<Ratio> g(N + 1);
  for (std::size_t i = 2; i <= N; ++i) g[i] = Ratio(1) / Ratio(factorial(i));
  return g;
}

}  // namespace

std::vector<Ratio> egf_prefix(std::size_t k, std::size_t N) {
  if (k == 0) throw std::invalid_argument("egf_prefix needs k >= 1");
  const std::vector<Ratio> g = exp_minus_one_minus_x(N);
  std::vector<Ratio> power = g;
  for (std::size_t i = 1; i < k; ++i) power = truncated_product(power, g, N);
  const Ratio scale = Ratio(1) / Ratio(factorial(k));
  for (auto& c : power) c *= scale;
  return power;
}

std::vector<Ratio> egf_d_total_prefix(std::size_t N) {
  const std::vector<Ratio> g = exp_minus_one_minus_x(N);
  // h = exp(g): n h_n = sum_{i=1}^{n} i g_i h_{n-i}.
  std::vector<Ratio> h(N + 1);
  h[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Ratio acc;
    for (std::size_t i = 1; i <= n; ++i)
      if (g[i] != 0) acc += Ratio(static_cast<unsigned long>(i)) * g[i] * h[n - i];
    h[n] = acc / static_cast<unsigned long>(n);
  }
  return h;
}

BellInversionReport bell_d_inversion(std::size_t n) {
  std::vector<Count> b, d;
  for (std::size_t i = 0; i <= n; ++i) {
    b.push_back(bell(i));
    d.push_back(d_total(i));
  }
  return bell_d_inversion(n, b, d);
}

BellInversionReport bell_d_inversion(std::size_t n, const std::vector<Count>& bell_values,
                                     const std::vector<Count>& d_values) {
  if (bell_values.size() <= n || d_values.size() <= n)
    throw std::invalid_argument("bell_d_inversion needs values for indices 0..n");
  BellInversionReport out;
  out.n = n;
  Int alternating, forward;
  for (std::size_t j = 0; j <= n; ++j) {
    const Count c = binomial(n, j);
    if (j % 2 == 0)
      alternating += c * bell_values[n - j];
    else
      alternating -= c * bell_values[n - j];
    forward += c * d_values[j];
  }
  out.d_from_bell = alternating == d_values[n];
  out.bell_from_d = forward == bell_values[n];
  return out;
}

}  // namespace blockpoly
