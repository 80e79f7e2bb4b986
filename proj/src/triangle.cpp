#include "blockpoly/triangle.hpp"

#include <map>
#include <stdexcept>

namespace blockpoly {

TriangleKind TriangleKind::dm(unsigned m) {
  if (m == 0) throw std::invalid_argument("Dm requires m >= 1");
  return {Family::Dm, m};
}

std::size_t TriangleKind::max_k(std::size_t n) const {
  switch (family) {
    case Family::D: return n / 2;
    case Family::S:
    case Family::C: return n;
    case Family::Dr: return n / (param + 1);
    case Family::Dm: return n / param;
  }
  return n;
}

std::string TriangleKind::label() const {
  switch (family) {
    case Family::D: return "D";
    case Family::S: return "S";
    case Family::C: return "C";
    case Family::Dr: return "Dr:" + std::to_string(param);
    case Family::Dm: return "Dm:" + std::to_string(param);
  }
  return "?";
}

TriangleKind TriangleKind::parse(std::string_view label) {
  if (label == "D") return d();
  if (label == "S") return s();
  if (label == "C") return c();
  auto colon = label.find(':');
  if (colon != std::string_view::npos) {
    auto head = label.substr(0, colon);
    auto tail = label.substr(colon + 1);
    Int p = parse_int(tail);
    if (p < 0 || !p.fits_uint_p()) throw std::invalid_argument("bad triangle parameter: " + std::string(label));
    if (head == "Dr") return dr(static_cast<unsigned>(p.get_ui()));
    if (head == "Dm") return dm(static_cast<unsigned>(p.get_ui()));
  }
  throw std::invalid_argument("unknown triangle kind: " + std::string(label));
}

TriangleTable::TriangleTable(TriangleKind kind) : kind_(kind) {
  if (kind_.family == Family::Dm && kind_.param == 0)
    throw std::invalid_argument("Dm requires m >= 1");
  rows_.push_back(Row{Count(1)});
}

namespace {

const Count& zero() {
  static const Count z;
  return z;
}

const Count& get(const std::deque<Row>& rows, std::size_t n, std::size_t k) {
  const Row& r = rows[n];
  return k < r.size() ? r[k] : zero();
}

}  // namespace

Row TriangleTable::compute_row_locked(std::size_t n) const {
  if (n == 0) return Row{Count(1)};
  Row out(kind_.max_k(n) + 1);
  const auto& R = rows_;
  switch (kind_.family) {
    case Family::D:
      // n in a block of size > 2 (insert into one of k blocks), or in a pair
      // with one of the other n-1 elements.
      for (std::size_t k = 1; k < out.size(); ++k) {
        out[k] = Count(static_cast<unsigned long>(k)) * get(R, n - 1, k);
        if (n >= 2) out[k] += Count(static_cast<unsigned long>(n - 1)) * get(R, n - 2, k - 1);
      }
      break;
    case Family::S:
      for (std::size_t k = 1; k < out.size(); ++k)
        out[k] = Count(static_cast<unsigned long>(k)) * get(R, n - 1, k) + get(R, n - 1, k - 1);
      break;
    case Family::C:
      for (std::size_t k = 1; k < out.size(); ++k)
        out[k] = Count(static_cast<unsigned long>(n - 1)) * get(R, n - 1, k) + get(R, n - 1, k - 1);
      break;
    case Family::Dr: {
      // n lies in a cycle of length > r+1 (insert after any of n-1 elements)
      // or in a cycle of length exactly r+1 (ordered choice of r companions).
      const std::size_t r = kind_.param;
      Count arrangements;
      if (n - 1 >= r) arrangements = factorial(n - 1) / factorial(n - 1 - r);
      for (std::size_t k = 1; k < out.size(); ++k) {
        out[k] = Count(static_cast<unsigned long>(n - 1)) * get(R, n - 1, k);
        if (n >= r + 1) out[k] += arrangements * get(R, n - r - 1, k - 1);
      }
      break;
    }
    case Family::Dm: {
      const std::size_t m = kind_.param;
      Count companions = n >= m ? binomial(n - 1, m - 1) : Count(0);
      for (std::size_t k = 1; k < out.size(); ++k) {
        out[k] = Count(static_cast<unsigned long>(k)) * get(R, n - 1, k);
        if (n >= m) out[k] += companions * get(R, n - m, k - 1);
      }
      break;
    }
  }
  return out;
}

void TriangleTable::extend_locked(std::size_t n) const {
  while (rows_.size() <= n) rows_.push_back(compute_row_locked(rows_.size()));
}

const Row& TriangleTable::row(std::size_t n) const {
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return rows_[n];
}

Count TriangleTable::at(std::size_t n, std::size_t k) const {
  const Row& r = row(n);
  return k < r.size() ? r[k] : Count(0);
}

std::size_t TriangleTable::size() const {
  std::lock_guard lock(mutex_);
  return rows_.size();
}

Row TriangleTable::next_row(std::size_t n) const {
  std::lock_guard lock(mutex_);
  if (n > 0) extend_locked(n - 1);
  return compute_row_locked(n);
}

bool TriangleTable::append_verified(std::size_t n, const Row& candidate) {
  std::lock_guard lock(mutex_);
  if (n < rows_.size()) return rows_[n] == candidate;
  if (n != rows_.size()) return false;
  Row expected = compute_row_locked(n);
  if (expected != candidate) return false;
  rows_.push_back(std::move(expected));
  return true;
}

namespace {

struct KindLess {
  bool operator()(const TriangleKind& a, const TriangleKind& b) const {
    if (a.family != b.family) return a.family < b.family;
    return a.param < b.param;
  }
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<TriangleKind, std::unique_ptr<TriangleTable>, KindLess>& registry() {
  static std::map<TriangleKind, std::unique_ptr<TriangleTable>, KindLess> tables;
  return tables;
}

}  // namespace

TriangleTable& mutable_triangle(TriangleKind kind) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[kind];
  if (!slot) slot = std::make_unique<TriangleTable>(kind);
  return *slot;
}

const TriangleTable& triangle(TriangleKind kind) { return mutable_triangle(kind); }

Count d_count(std::size_t n, std::size_t k) { return triangle(TriangleKind::d()).at(n, k); }

Count d_total(std::size_t n) { return row_total(triangle(TriangleKind::d()).row(n)); }

Count stirling2(std::size_t n, std::size_t k) { return triangle(TriangleKind::s()).at(n, k); }

Count bell(std::size_t n) { return row_total(triangle(TriangleKind::s()).row(n)); }

Count stirling1_unsigned(std::size_t n, std::size_t k) { return triangle(TriangleKind::c()).at(n, k); }

Count d_r_cycle(std::size_t n, std::size_t k, unsigned r) { return triangle(TriangleKind::dr(r)).at(n, k); }

Count d_m_block(std::size_t n, std::size_t k, unsigned m) { return triangle(TriangleKind::dm(m)).at(n, k); }

const Row& triangle_row(TriangleKind kind, std::size_t n) { return triangle(kind).row(n); }

Count row_total(const Row& row) {
  Count total;
  for (const auto& v : row) total += v;
  return total;
}

}  // namespace blockpoly
