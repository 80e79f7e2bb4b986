#pragma once

// Counting triangles computed by their defining recurrences, memoized by row.
//
//   D(n,k)    partitions of [n] into k blocks, every block of size >= 2
//   S(n,k)    partitions of [n] into k blocks
//   c(n,k)    permutations of [n] with k cycles
//   d_r(n,k)  permutations of [n] with k cycles, every cycle longer than r
//   D_m(n,k)  partitions of [n] into k blocks, every block of size >= m
//
// Every table is seeded with T(0,0) = 1 and T(n,0) = 0 for n >= 1.

#include "blockpoly/numeric.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace blockpoly {

using Row = std::vector<Count>;

enum class Family { D, S, C, Dr, Dm };

struct TriangleKind {
  Family family = Family::D;
  /// r for Dr (r >= 0), m for Dm (m >= 1); ignored otherwise.
  unsigned param = 0;

  static TriangleKind d() { return {Family::D, 0}; }
  static TriangleKind s() { return {Family::S, 0}; }
  static TriangleKind c() { return {Family::C, 0}; }
  static TriangleKind dr(unsigned r) { return {Family::Dr, r}; }
  static TriangleKind dm(unsigned m);

  /// Largest k with a possibly nonzero entry in row n.
  std::size_t max_k(std::size_t n) const;

  /// "D", "S", "C", "Dr:r" or "Dm:m", the label used by the cache format.
  std::string label() const;
  static TriangleKind parse(std::string_view label);

  friend bool operator==(const TriangleKind&, const TriangleKind&) = default;
};

/// Append-only table of rows for one triangle kind. Rows are computed on
/// demand from the previous rows and never change afterwards, so references
/// returned by row() stay valid for the lifetime of the table.
class TriangleTable {
 public:
  explicit TriangleTable(TriangleKind kind);

  TriangleKind kind() const { return kind_; }

  /// Row n, indices k = 0..kind().max_k(n).
  const Row& row(std::size_t n) const;

  /// Entry (n,k); zero outside the support.
  Count at(std::size_t n, std::size_t k) const;

  /// Number of rows currently memoized.
  std::size_t size() const;

  /// Row n computed from rows n-1 (and n-m or n-r-1) of this table, which
  /// must already be present. Used both to extend the table and to verify
  /// imported rows.
  Row next_row(std::size_t n) const;

  /// Accepts a row for index size() after checking it against the
  /// recurrence. Returns false (and leaves the table untouched) on mismatch.
  bool append_verified(std::size_t n, const Row& candidate);

 private:
  Row compute_row_locked(std::size_t n) const;
  void extend_locked(std::size_t n) const;

  TriangleKind kind_;
  mutable std::mutex mutex_;
  mutable std::deque<Row> rows_;
};

/// Process-wide table for a kind, created on first use.
const TriangleTable& triangle(TriangleKind kind);
TriangleTable& mutable_triangle(TriangleKind kind);

/// Number of partitions of [n] into k blocks, all of size at least 2.
Count d_count(std::size_t n, std::size_t k);
/// D(n) = sum over k of D(n,k); D(0) = 1.
Count d_total(std::size_t n);
Count stirling2(std::size_t n, std::size_t k);
Count bell(std::size_t n);
Count stirling1_unsigned(std::size_t n, std::size_t k);
Count d_r_cycle(std::size_t n, std::size_t k, unsigned r);
/// m >= 1; throws std::invalid_argument for m = 0.
Count d_m_block(std::size_t n, std::size_t k, unsigned m);
const Row& triangle_row(TriangleKind kind, std::size_t n);

/// Sum of a row.
Count row_total(const Row& row);

}  // namespace blockpoly
