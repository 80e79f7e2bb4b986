#include "blockpoly/real_roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace blockpoly {

namespace {

constexpr int kSeedAttempts = 400;
constexpr int kSeparationSteps = 4000;
constexpr std::size_t kSturmCheckpointEvery = 10;

// A dyadic m/2^k with few bits inside the middle half of (lo, hi).
Ratio short_dyadic(const Ratio& lo, const Ratio& hi) {
  const Ratio quarter = (hi - lo) / 4;
  const Ratio a = lo + quarter;
  const Ratio b = hi - quarter;
  auto inside = [&](std::size_t k, Ratio& out) {
    Int scale = 1;
    scale <<= k;
    Int m;
    const Ratio scaled = a * Ratio(scale);
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    m += 1;
    out = make_ratio(m, scale);
    return out < b;
  };
  Ratio out;
  if (inside(0, out)) return out;
  // 2^-k <= (b - a) guarantees a hit; start a little below that.
  const Ratio width = b - a;
  const long num_bits = static_cast<long>(mpz_sizeinbase(width.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(width.get_den_mpz_t(), 2));
  for (long k = std::max(1L, den_bits - num_bits - 2);; ++k)
    if (inside(static_cast<std::size_t>(k), out)) return out;
}

// Roots of D_n for n = 0, 1, 2, ... (entries for n < 2 stay empty).
class DRootChain {
 public:
  std::vector<RootBracket> brackets(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return levels_[n];
  }

  bool sturm_certify(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend_locked(n);
    return sturm_check_locked(n);
  }

 private:
  void extend_locked(std::size_t n) {
    if (n < 2) throw std::invalid_argument("D_n has roots only for n >= 2");
    while (levels_.size() <= n) {
      const std::size_t next = levels_.size();
      if (next < 2) {
        levels_.emplace_back();
        continue;
      }
      levels_.push_back(next < 4 ? base_level() : seeded_level(next));
      if (next % kSturmCheckpointEvery == 0 && !sturm_check_locked(next)) {
        levels_.pop_back();
        throw RootIsolationError("Sturm checkpoint rejected the brackets of D_" + std::to_string(next), {});
      }
    }
  }

  // D_2 = D_3 = x.
  static std::vector<RootBracket> base_level() {
    return {RootBracket{Ratio(-1), Ratio(0), Certificate::ExactRoot, {}}};
  }

  std::vector<RootBracket> seeded_level(std::size_t n) {
    const IntPoly p = d_poly(n);
    const IntPoly prev = d_poly(n - 1);
    if (p.coeff(0) != 0 || p.coeff(1) != 1)
      throw RootIsolationError("D_" + std::to_string(n) + " must be x + O(x^2)", {});
    // Q = D_n / x has Q(0) = D(n,1) = 1 and the nonzero roots of D_n.
    const IntPoly q(std::vector<Int>(p.coeffs().begin() + 1, p.coeffs().end()));
    const std::size_t roots_needed = static_cast<std::size_t>(q.degree());
    auto& ys = levels_[n - 1];
    const std::size_t seeds = ys.size() - 1;  // nonzero roots of D_{n-1}
    if (roots_needed != seeds && roots_needed != seeds + 1)
      throw RootIsolationError("unexpected degree of D_" + std::to_string(n), {});

    // Separating points t_i inside the brackets of y_i; Q(t_i) must have
    // sign (-1)^i. A wrong sign means the y bracket is still too wide.
    std::vector<Ratio> t(seeds + 1);
    t[0] = 0;
    std::vector<std::size_t> pending(seeds);
    for (std::size_t i = 1; i <= seeds; ++i) pending[i - 1] = i;
    for (int attempt = 0; !pending.empty(); ++attempt) {
      if (attempt > kSeedAttempts)
        throw RootIsolationError("could not separate the roots of D_" + std::to_string(n), {});
      std::vector<std::size_t> still;
      for (auto i : pending) {
        t[i] = short_dyadic(ys[i].lo, ys[i].hi);
        const int expected = i % 2 == 0 ? 1 : -1;
        if (sign_at(q, t[i]) != expected) {
          ys[i] = bisect(ys[i], prev);
          still.push_back(i);
        }
      }
      pending = std::move(still);
    }

    std::vector<RootBracket> xs;
    xs.reserve(roots_needed + 1);
    xs.push_back({});  // root 0, filled in below
    for (std::size_t i = 1; i <= seeds; ++i) xs.push_back({t[i], t[i - 1], Certificate::SignChange, {}});
    if (roots_needed == seeds + 1) {
      const Ratio bound = cauchy_bound(q);
      const int expected = roots_needed % 2 == 0 ? 1 : -1;
      if (sign_at(q, -bound) != expected || sign_at(q, t[seeds]) == expected)
        throw RootIsolationError("leftmost root of D_" + std::to_string(n) + " not bracketed", {});
      xs.push_back({-bound, t[seeds], Certificate::SignChange, {}});
    }

    if (roots_needed == 0) {
      xs[0] = RootBracket{Ratio(-1), Ratio(0), Certificate::ExactRoot, {}};
      return xs;
    }
    // Pull x_1's bracket strictly below 0 so that 0 gets its own bracket.
    while (xs[1].hi >= 0) xs[1] = bisect(xs[1], q);
    xs[0] = RootBracket{xs[1].hi, Ratio(0), Certificate::ExactRoot, {}};
    return xs;
  }

  bool sturm_check_locked(std::size_t n) {
    const IntPoly p = d_poly(n);
    SturmSequence seq(p);
    if (!seq.squarefree() || static_cast<long>(seq.count_all()) != p.degree()) return false;
    // Neighbouring brackets share endpoints; evaluate the chain once per point.
    std::map<Ratio, int> variations;
    auto at = [&](const Ratio& x) {
      auto it = variations.find(x);
      if (it == variations.end()) it = variations.emplace(x, seq.variations(x)).first;
      return it->second;
    };
    for (auto& b : levels_[n]) {
      if (at(b.lo) - at(b.hi) != 1) return false;
      b.sturm_count = 1;
    }
    return true;
  }

  std::mutex mutex_;
  std::vector<std::vector<RootBracket>> levels_;
};

DRootChain& chain() {
  static DRootChain instance;
  return instance;
}

}  // namespace

std::vector<RootBracket> d_poly_roots(std::size_t n) { return chain().brackets(n); }

bool sturm_certify_d_roots(std::size_t n) { return chain().sturm_certify(n); }

InterlacingReport verify_interlacing(std::size_t n) {
  if (n < 5) throw std::invalid_argument("interlacing is checked for n >= 5");
  InterlacingReport report;
  report.n = n;
  const IntPoly p = d_poly(n);
  const IntPoly prev = d_poly(n - 1);
  report.degrees = {static_cast<std::size_t>(p.degree()), static_cast<std::size_t>(prev.degree())};
  const bool even = n % 2 == 0;
  report.pattern = even ? InterlacingPattern::ExtraLeftmost : InterlacingPattern::SameDegree;
  const std::size_t expected_degree = even ? report.degrees.second + 1 : report.degrees.second;
  if (report.degrees.first != expected_degree) {
    report.failure = "degree pattern mismatch";
    return report;
  }
  try {
    report.brackets_n = d_poly_roots(n);
    report.brackets_n_minus_1 = d_poly_roots(n - 1);
  } catch (const RootIsolationError& e) {
    report.failure = e.what();
    return report;
  }
  auto& xs = report.brackets_n;
  auto& ys = report.brackets_n_minus_1;
  if (xs.front().hi != 0 || ys.front().hi != 0 || p.coeff(0) != 0 || prev.coeff(0) != 0) {
    report.failure = "root 0 missing";
    return report;
  }

  // Expected descending order: x_1, y_1, x_2, y_2, ..., then x_d for even n.
  struct Slot {
    RootBracket* bracket;
    const IntPoly* poly;
  };
  std::vector<Slot> order;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    order.push_back({&xs[i], &p});
    if (i < ys.size()) order.push_back({&ys[i], &prev});
  }
  if (order.size() != xs.size() - 1 + ys.size() - 1) {
    report.failure = "root count mismatch";
    return report;
  }
  if (!order.empty() && !(order.front().bracket->hi < 0)) {
    report.failure = "x_1 not separated from 0";
    return report;
  }
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    RootBracket& upper = *order[j].bracket;
    RootBracket& lower = *order[j + 1].bracket;
    int steps = 0;
    while (lower.hi > upper.lo) {
      if (upper.hi <= lower.lo) {
        report.failure = "roots out of order at position " + std::to_string(j + 1);
        return report;
      }
      if (++steps > kSeparationSteps) {
        report.failure = "brackets did not separate at position " + std::to_string(j + 1);
        return report;
      }
      if (upper.width() >= lower.width() && upper.certificate != Certificate::ExactRoot)
        upper = bisect(upper, *order[j].poly);
      else
        lower = bisect(lower, *order[j + 1].poly);
    }
  }
  report.chain_verified = true;
  return report;
}

}  // namespace blockpoly
