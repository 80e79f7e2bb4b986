#pragma once

// Named verification suites over every module.

#include <string>
#include <vector>

namespace blockpoly {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// recurrence, interlacing, realroots, logconcavity, darroch, identities,
/// congruence, ogf, asymptotics, bounds, oracle, normality.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

/// Runs one suite up to max_n (clamped per suite to its desk-scale budget).
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::size_t max_n);

/// "all" expands to every suite, run concurrently; results keep the order
/// of suite_names().
std::vector<SuiteResult> run_suites(const std::string& name, std::size_t max_n);

}  // namespace blockpoly
