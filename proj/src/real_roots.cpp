#include "blockpoly/real_roots.hpp"

#include <json.hpp>

#include <algorithm>

namespace blockpoly {

double RootBracket::approx() const {
  if (certificate == Certificate::ExactRoot) return to_double(hi);
  return to_double(midpoint());
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<RatPoly> chain{to_rat(p)};
  RatPoly d = to_rat(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

std::vector<IntPoly> primitive_sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  std::vector<IntPoly> chain{primitive_part(p)};
  IntPoly d = primitive_part(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    IntPoly r = signed_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-primitive_part(r));
  }
  return chain;
}

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  IntPoly sqf = p;
  if (p.degree() >= 1) {
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() >= 1) {
      squarefree_ = false;
      sqf = exact_quotient(p, g);
    }
  }
  chain_ = primitive_sturm_chain(sqf);
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::variations(const Ratio& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return count_changes(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  return count_changes(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return count_changes(signs);
}

std::size_t SturmSequence::count(const Ratio& lo, const Ratio& hi) const {
  if (!(lo < hi)) return 0;
  return static_cast<std::size_t>(variations(lo) - variations(hi));
}

std::size_t SturmSequence::count_all() const {
  return static_cast<std::size_t>(variations_at_neg_inf() - variations_at_pos_inf());
}

RootCount count_real_roots(const IntPoly& p, const Ratio& lo, const Ratio& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("root count needs lo < hi");
  SturmSequence seq(p);
  RootCount out{0, lo, hi, false, false};
  // Shrink the nudge by powers of two until it crosses no root.
  auto nudge_up = [&](const Ratio& at, Ratio step) {
    while (true) {
      Ratio moved = at + step;
      if (sign_at(p, moved) != 0 && seq.count(at, moved) == 0) return moved;
      step /= 2;
    }
  };
  const Ratio step = (hi - lo) / 2;
  if (sign_at(p, lo) == 0) {
    out.lo_used = nudge_up(lo, step);
    out.lo_nudged = true;
  }
  if (sign_at(p, hi) == 0) {
    out.hi_used = nudge_up(hi, step);
    out.hi_nudged = true;
  }
  out.count = seq.count(out.lo_used, out.hi_used);
  return out;
}

Ratio cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Cauchy bound of the zero polynomial");
  Ratio worst;
  const Int lead = ::abs(p.leading());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Ratio r = make_ratio(::abs(p.coeffs()[i]), lead);
    if (r > worst) worst = r;
  }
  Ratio bound = worst + 1;
  Ratio power(1);
  while (power < bound) power *= 2;
  return power;
}

RealRootedness verify_real_rooted(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real-rootedness of the zero polynomial");
  SturmSequence seq(p);
  RealRootedness out;
  out.distinct_real_roots = seq.count_all();
  out.all_real = static_cast<long>(out.distinct_real_roots) == seq.squarefree_part().degree();
  if (out.all_real) {
    out.all_simple = seq.squarefree();
    out.all_nonpositive = seq.variations(Ratio(0)) - seq.variations_at_pos_inf() == 0;
  }
  return out;
}

std::vector<RootBracket> isolate_roots(const IntPoly& p) {
  RealRootedness report = verify_real_rooted(p);
  if (!report.all_real) throw RootIsolationError("polynomial has non-real roots", report);
  if (!report.all_simple.value_or(false)) throw RootIsolationError("polynomial is not squarefree", report);
  SturmSequence seq(p);
  const Ratio bound = cauchy_bound(p);

  struct Interval {
    Ratio lo, hi;
    std::size_t roots;
  };
  std::vector<RootBracket> out;
  std::vector<Interval> stack{{-bound, bound, seq.count(-bound, bound)}};
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.roots == 0) continue;
    if (iv.roots == 1) {
      out.push_back({iv.lo, iv.hi, Certificate::Sturm, 1u});
      continue;
    }
    Ratio mid = (iv.lo + iv.hi) / 2;
    std::size_t lower = seq.count(iv.lo, mid);
    // Lower half is pushed first so the upper half (larger roots) pops first.
    stack.push_back({iv.lo, mid, lower});
    stack.push_back({mid, iv.hi, iv.roots - lower});
  }
  for (auto& b : out)
    if (sign_at(p, b.hi) == 0) b.certificate = Certificate::ExactRoot;
  return out;
}

RootBracket bisect(const RootBracket& b, const IntPoly& p) {
  RootBracket out = b;
  Ratio mid = b.midpoint();
  if (b.certificate == Certificate::ExactRoot) {
    out.lo = std::move(mid);
    return out;
  }
  const int at_mid = sign_at(p, mid);
  if (at_mid == 0) {
    out.hi = std::move(mid);
    out.certificate = Certificate::ExactRoot;
    return out;
  }
  const int at_hi = sign_at(p, b.hi);
  if (at_hi == 0) {
    out.certificate = Certificate::ExactRoot;
    out.lo = std::move(mid);
  } else if (at_mid == at_hi) {
    out.hi = std::move(mid);
  } else {
    out.lo = std::move(mid);
  }
  return out;
}

RootBracket refine(const RootBracket& b, const IntPoly& p, const Ratio& eps) {
  if (eps <= 0) throw std::invalid_argument("refine needs eps > 0");
  RootBracket cur = b;
  while (cur.width() > eps) {
    if (cur.certificate == Certificate::ExactRoot) {
      cur.lo = std::max(cur.lo, Ratio(cur.hi - eps));
      break;
    }
    cur = bisect(cur, p);
  }
  return cur;
}

RootBracket refine_relative(const RootBracket& b, const IntPoly& p, const Ratio& rel) {
  if (rel <= 0) throw std::invalid_argument("refine needs a positive tolerance");
  RootBracket cur = b;
  while (true) {
    if (cur.certificate == Certificate::ExactRoot) {
      if (cur.hi == 0) throw std::invalid_argument("relative refinement of the root 0");
      Ratio target = rel * abs(cur.hi);
      if (cur.width() > target) cur.lo = cur.hi - target;
      return cur;
    }
    const bool straddles_zero = cur.lo < 0 && cur.hi >= 0;
    if (!straddles_zero && cur.width() <= rel * std::min(abs(cur.lo), abs(cur.hi))) return cur;
    cur = bisect(cur, p);
  }
}

std::string to_json(const std::vector<RootBracket>& brackets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : brackets) {
    arr.push_back({{"lo", to_string(b.lo)},
                   {"hi", to_string(b.hi)},
                   {"approx", b.approx()},
                   {"exact", b.certificate == Certificate::ExactRoot}});
  }
  return arr.dump();
}

}  // namespace blockpoly
