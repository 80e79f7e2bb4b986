#pragma once

// Certified real-root counting and isolation with exact rational arithmetic.
//
// A RootBracket (lo, hi] holds exactly one real root of its polynomial. Two
// certificates are used: a Sturm count of 1, or a sign change of the
// polynomial across the open interval combined with a global count showing
// that every root is accounted for. Roots that are hit exactly keep the
// root as `hi` and are tagged ExactRoot.

#include "blockpoly/numeric.hpp"
#include "blockpoly/polynomials.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockpoly {

enum class Certificate { Sturm, SignChange, ExactRoot };

struct RootBracket {
  Ratio lo;
  Ratio hi;
  Certificate certificate = Certificate::Sturm;
  /// Sturm count over (lo, hi] when one was computed; always 1 if set.
  std::optional<unsigned> sturm_count;

  Ratio width() const { return hi - lo; }
  Ratio midpoint() const { return (lo + hi) / 2; }
  bool contains(const Ratio& x) const { return lo < x && x <= hi; }
  /// Display-only binary64 approximation of the root.
  double approx() const;
};

/// Standard Sturm chain p, p', -rem(p, p'), ... over the rationals, ending
/// at the last nonzero remainder (a constant iff p is squarefree).
std::vector<RatPoly> sturm_chain(const IntPoly& p);

/// Sturm sequence of the squarefree part of p, stored as primitive integer
/// polynomials (each a positive multiple of the corresponding standard
/// chain element, so sign variations agree). Counting is valid at any
/// endpoints, roots included: variations(a) - variations(b) is the number
/// of distinct real roots in (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  const std::vector<IntPoly>& chain() const { return chain_; }
  bool squarefree() const { return squarefree_; }
  const IntPoly& squarefree_part() const { return chain_.front(); }

  int variations(const Ratio& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  std::size_t count(const Ratio& lo, const Ratio& hi) const;
  std::size_t count_all() const;

 private:
  std::vector<IntPoly> chain_;
  bool squarefree_ = true;
};

/// Primitive integer chain p, p', then negated pseudo-remainders; exposed for
/// comparison with sturm_chain().
std::vector<IntPoly> primitive_sturm_chain(const IntPoly& p);

struct RootCount {
  std::size_t count = 0;
  Ratio lo_used;
  Ratio hi_used;
  bool lo_nudged = false;
  bool hi_nudged = false;
};

/// Distinct real roots in (lo, hi]. An endpoint that is itself a root is
/// moved by an exact dyadic nudge that provably crosses no other root; the
/// nudge is reported in the result. Throws std::invalid_argument unless
/// lo < hi and p is nonzero.
RootCount count_real_roots(const IntPoly& p, const Ratio& lo, const Ratio& hi);

struct RealRootedness {
  bool all_real = false;
  /// Only meaningful when all_real holds.
  std::optional<bool> all_simple;
  std::optional<bool> all_nonpositive;
  std::size_t distinct_real_roots = 0;
};

RealRootedness verify_real_rooted(const IntPoly& p);

/// Power of two strictly larger than the modulus of every complex root.
Ratio cauchy_bound(const IntPoly& p);

class RootIsolationError : public std::runtime_error {
 public:
  RootIsolationError(const std::string& what, RealRootedness report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const RealRootedness& report() const { return report_; }

 private:
  RealRootedness report_;
};

/// Disjoint Sturm-certified brackets, one per root, sorted by descending
/// root. Throws RootIsolationError for input that is not squarefree and
/// real-rooted.
std::vector<RootBracket> isolate_roots(const IntPoly& p);

/// Bisects until the width is at most eps (eps > 0). The bracket must hold
/// exactly one simple root of p.
RootBracket refine(const RootBracket& b, const IntPoly& p, const Ratio& eps);

/// One bisection step; no-op for an exact-root bracket.
RootBracket bisect(const RootBracket& b, const IntPoly& p);

/// Refines until the width is at most rel * |root| (the root must be nonzero).
RootBracket refine_relative(const RootBracket& b, const IntPoly& p, const Ratio& rel);

// ---------------------------------------------------------------------------
// Roots of D_n(x), isolated inductively: refined brackets of the roots of
// D_{n-1} supply the separating points for the roots of D_n. Every tenth n
// (and every n on request) is additionally certified by a Sturm count.

/// Brackets for the roots of D_n (n >= 2), descending: the exact root 0
/// first, then x_1 > x_2 > ... Throws RootIsolationError if the separating
/// points cannot be found.
std::vector<RootBracket> d_poly_roots(std::size_t n);

/// Sturm-checks the stored brackets of D_n: the global count equals the
/// degree and every bracket counts exactly one root.
bool sturm_certify_d_roots(std::size_t n);

enum class InterlacingPattern { SameDegree, ExtraLeftmost };

struct InterlacingReport {
  std::size_t n = 0;
  /// (deg D_n, deg D_{n-1}).
  std::pair<std::size_t, std::size_t> degrees;
  InterlacingPattern pattern = InterlacingPattern::SameDegree;
  bool chain_verified = false;
  std::vector<RootBracket> brackets_n;
  std::vector<RootBracket> brackets_n_minus_1;
  std::string failure;
};

/// Checks 0 > x_1 > y_1 > x_2 > y_2 > ... between the roots x of D_n and y of
/// D_{n-1} (and the final x_d < y_{d-1} when n is even), refining until the
/// brackets are pairwise disjoint. n >= 5.
InterlacingReport verify_interlacing(std::size_t n);

// ---------------------------------------------------------------------------
// Bernoulli factorization and the normal-approximation diagnostic.

/// p_i = 1/(1 - r_i) for a nonpositive root r_i, enclosed in [lo, hi].
struct BernoulliProb {
  Ratio lo;
  Ratio hi;
  double value = 0;
  double error = 0;
};

/// One probability per root (descending roots, so descending p_i). The
/// product of (p_i x + 1 - p_i) is p(x)/p(1). Throws std::invalid_argument
/// for negative coefficients, p(1) <= 0 or a positive root, and
/// RootIsolationError if p is not squarefree and real-rooted.
std::vector<BernoulliProb> bernoulli_decomposition(const IntPoly& p, const Ratio& eps);
/// Same for D_n, using the inductive root brackets.
std::vector<BernoulliProb> bernoulli_decomposition_d(std::size_t n, const Ratio& eps);

/// Interval re-expansion of prod (p_i x + 1 - p_i): true iff every
/// normalized coefficient of p lies inside the enclosure.
bool bernoulli_reconstructs(const IntPoly& p, const std::vector<BernoulliProb>& probs);

struct NormalityReport {
  std::size_t n = 0;
  /// P(X = k) for k = 0..deg D_n.
  std::vector<Ratio> distribution;
  Ratio mean;
  Ratio variance;
  std::vector<BernoulliProb> bernoulli_probs;
  /// mean and variance lie inside the interval sums of p_i and p_i(1 - p_i).
  bool bernoulli_moments_ok = false;
  /// max over k of |P(X <= k) - Phi((k + 1/2 - mean)/sd)|.
  double sup_cdf_distance = 0;
};

NormalityReport normality_diagnostic(std::size_t n);

/// Sup distance between a lattice distribution and the matched Gaussian
/// evaluated at half-integers.
double sup_cdf_distance(const std::vector<Ratio>& distribution, const Ratio& mean, const Ratio& variance);

std::string to_json(const std::vector<RootBracket>& brackets);

}  // namespace blockpoly
