#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name) and dispatches one subcommand:
/// table, poly, roots, peak, bound, series, verify, cache, crosscheck.
/// Returns 0 on success, 1 when a verification or cross-check fails, 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockpoly::cli
