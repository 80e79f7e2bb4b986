#pragma once

// Brute-force ground truth by exhaustive enumeration. Nothing here uses the
// recurrences of the other modules.

#include "blockpoly/numeric.hpp"
#include "blockpoly/peaks.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace blockpoly {

inline constexpr std::size_t kPartitionBudget = 13;
inline constexpr std::size_t kPermutationBudget = 9;
inline constexpr std::size_t kExhaustivePermutationBudget = 9;
inline constexpr std::size_t kNonSingletonOracleMax = 12;
inline constexpr std::size_t kBijectionBudget = 10;

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set partitions of [n] as restricted growth strings a_0..a_{n-1}
/// (a_0 = 0, a_i <= 1 + max(a_0..a_{i-1})), in lexicographic order, keeping
/// only those whose blocks all have at least min_block elements.
class PartitionIterator {
 public:
  PartitionIterator(std::size_t n, std::size_t min_block = 1);

  /// Advances to the next admissible partition; false when exhausted. Must be
  /// called once before the first partition is read.
  bool next();

  const std::vector<std::uint8_t>& growth_string() const { return rgs_; }
  std::size_t blocks() const { return blocks_; }
  const std::vector<std::uint8_t>& block_sizes() const { return sizes_; }

 private:
  bool advance();
  bool admissible() const;

  std::size_t n_;
  std::size_t min_block_;
  std::vector<std::uint8_t> rgs_;
  std::vector<std::uint8_t> prefix_max_;  // max(a_0..a_i)
  std::vector<std::uint8_t> sizes_;
  std::size_t blocks_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Histogram over k of partitions of [n] into k blocks of size >= min_block.
std::vector<Count> count_partitions_by_blocks(std::size_t n, std::size_t min_block);

/// D(n)/B(n) by enumeration.
Ratio count_singleton_free_fraction(std::size_t n);

/// Histogram over k of permutations of [n] with k cycles, every cycle longer
/// than min_cycle_exclusive, by summing n!/prod(j^m_j m_j!) over cycle types.
std::vector<Count> count_permutations_by_cycles(std::size_t n, std::size_t min_cycle_exclusive);

/// Same histogram by walking all n! permutations and counting cycles.
std::vector<Count> count_permutations_exhaustive(std::size_t n, std::size_t min_cycle_exclusive);

/// Mean block count over partitions of [n] with blocks of size >= min_block.
/// Throws std::domain_error when there are no such partitions.
Ratio mean_blocks_by_enumeration(std::size_t n, std::size_t min_block);

/// Totals of N and N^2 over all partitions of [n], N = number of blocks of
/// size >= 2.
NonSingletonMoments non_singleton_moments_by_enumeration(std::size_t n);

struct BijectionReport {
  std::size_t n = 0;
  std::size_t domain_size = 0;  // D(n) + D(n+1)
  std::size_t image_size = 0;   // distinct images
  std::size_t codomain_size = 0;  // B(n)
  bool injective = false;
  bool surjective = false;
};

/// Applies the map singleton-free partitions of [n] and [n+1] -> partitions
/// of [n] (identity on the first; on the second, delete n+1 and split its
/// block-mates into singletons) to every enumerated partition.
BijectionReport verify_singleton_bijection(std::size_t n);

}  // namespace blockpoly
