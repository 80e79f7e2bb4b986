#include "blockpoly/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace blockpoly {

namespace {

void check_budget(std::size_t n, std::size_t budget, const char* what) {
  if (n > budget)
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration budget " +
                         std::to_string(budget));
}

}  // namespace

PartitionIterator::PartitionIterator(std::size_t n, std::size_t min_block)
    : n_(n), min_block_(min_block), rgs_(n), prefix_max_(n), sizes_(n) {
  check_budget(n, kPartitionBudget, "partition enumeration");
}

bool PartitionIterator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) sizes_[0] = static_cast<std::uint8_t>(n_);
    blocks_ = n_ > 0 ? 1 : 0;
    return true;
  }
  for (std::size_t i = n_; i-- > 1;) {
    if (rgs_[i] > prefix_max_[i - 1]) continue;
    --sizes_[rgs_[i]];
    ++rgs_[i];
    ++sizes_[rgs_[i]];
    for (std::size_t j = i + 1; j < n_; ++j) {
      --sizes_[rgs_[j]];
      rgs_[j] = 0;
      ++sizes_[0];
    }
    for (std::size_t j = i; j < n_; ++j) prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j]);
    blocks_ = static_cast<std::size_t>(prefix_max_[n_ - 1]) + 1;
    return true;
  }
  done_ = true;
  return false;
}

bool PartitionIterator::admissible() const {
  for (std::size_t b = 0; b < blocks_; ++b)
    if (sizes_[b] < min_block_) return false;
  return true;
}

bool PartitionIterator::next() {
  while (advance())
    if (admissible()) return true;
  return false;
}

std::vector<Count> count_partitions_by_blocks(std::size_t n, std::size_t min_block) {
  if (min_block == 0) min_block = 1;
  std::vector<unsigned long> hist(n / min_block + 1);
  PartitionIterator it(n, min_block);
  while (it.next()) ++hist[it.blocks()];
  return {hist.begin(), hist.end()};
}

Ratio count_singleton_free_fraction(std::size_t n) {
  std::vector<Count> all = count_partitions_by_blocks(n, 1);
  std::vector<Count> free = count_partitions_by_blocks(n, 2);
  Count total = std::accumulate(all.begin(), all.end(), Count(0));
  Count singleton_free = std::accumulate(free.begin(), free.end(), Count(0));
  return make_ratio(singleton_free, total);
}

std::vector<Count> count_permutations_by_cycles(std::size_t n, std::size_t min_cycle_exclusive) {
  check_budget(n, kPermutationBudget, "permutation enumeration");
  const std::size_t min_part = min_cycle_exclusive + 1;
  std::vector<Count> hist(n / min_part + 1);
  const Count n_fact = factorial(n);
  // Cycle types as non-increasing part sequences, parts >= min_part.
  std::vector<std::size_t> parts;
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t largest) -> void {
    if (remaining == 0) {
      Count denom = 1;
      std::size_t run = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        denom *= static_cast<unsigned long>(parts[i]);
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        denom *= static_cast<unsigned long>(run);  // accumulates m_j!
      }
      hist[parts.size()] += n_fact / denom;
      return;
    }
    for (std::size_t part = std::min(largest, remaining); part >= min_part; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
  return hist;
}

std::vector<Count> count_permutations_exhaustive(std::size_t n, std::size_t min_cycle_exclusive) {
  check_budget(n, kExhaustivePermutationBudget, "exhaustive permutation enumeration");
  std::vector<unsigned long> hist(n / (min_cycle_exclusive + 1) + 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t cycles = 0;
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t j = s; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      ++cycles;
      ok = len > min_cycle_exclusive;
    }
    if (ok) ++hist[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {hist.begin(), hist.end()};
}

Ratio mean_blocks_by_enumeration(std::size_t n, std::size_t min_block) {
  unsigned long count = 0, blocks = 0;
  PartitionIterator it(n, min_block == 0 ? 1 : min_block);
  while (it.next()) {
    ++count;
    blocks += it.blocks();
  }
  if (count == 0) throw std::domain_error("no admissible partitions");
  return make_ratio(Int(blocks), Int(count));
}

NonSingletonMoments non_singleton_moments_by_enumeration(std::size_t n) {
  unsigned long total = 0, squares = 0;
  PartitionIterator it(n, 1);
  while (it.next()) {
    unsigned long big = 0;
    for (std::size_t b = 0; b < it.blocks(); ++b)
      if (it.block_sizes()[b] >= 2) ++big;
    total += big;
    squares += big * big;
  }
  return {Count(total), Count(squares)};
}

namespace {

std::uint64_t pack(const std::vector<std::uint8_t>& labels) {
  std::uint64_t key = 0;
  for (auto v : labels) key = (key << 4) | v;
  return key;
}

// Canonical growth string of a labelling (labels in order of first use).
std::vector<std::uint8_t> canonical(const std::vector<unsigned>& labels) {
  std::vector<std::uint8_t> out(labels.size());
  std::vector<std::pair<unsigned, std::uint8_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto hit = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == labels[i]; });
    if (hit == seen.end()) {
      seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
      out[i] = seen.back().second;
    } else {
      out[i] = hit->second;
    }
  }
  return out;
}

}  // namespace

BijectionReport verify_singleton_bijection(std::size_t n) {
  check_budget(n, kBijectionBudget, "bijection check");
  BijectionReport report;
  report.n = n;
  std::unordered_set<std::uint64_t> images;
  bool collision = false;
  auto insert = [&](const std::vector<std::uint8_t>& rgs) {
    ++report.domain_size;
    if (!images.insert(pack(rgs)).second) collision = true;
  };

  PartitionIterator same(n, 2);
  while (same.next()) insert(same.growth_string());

  PartitionIterator bigger(n + 1, 2);
  while (bigger.next()) {
    const auto& rgs = bigger.growth_string();
    const unsigned removed_block = rgs[n];
    std::vector<unsigned> labels(n);
    for (std::size_t i = 0; i < n; ++i)
      labels[i] = rgs[i] == removed_block ? 100u + static_cast<unsigned>(i) : rgs[i];
    insert(canonical(labels));
  }

  PartitionIterator all(n, 1);
  while (all.next()) ++report.codomain_size;
  report.image_size = images.size();
  report.injective = !collision;
  report.surjective = report.image_size == report.codomain_size;
  return report;
}

}  // namespace blockpoly
