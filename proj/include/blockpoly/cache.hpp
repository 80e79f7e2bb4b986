#pragma once

// Plain-text persistence of memoized triangle rows.
//
// One row per line: `KIND n k0 k1 k2 ...`, decimal integers separated by
// single spaces, `\n` line endings. KIND is one of D, S, C, Dr:r, Dm:m.

#include "blockpoly/triangle.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace blockpoly {

class CacheError : public std::runtime_error {
 public:
  CacheError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Writes rows 0..max_n of the kind's table.
void export_rows(std::ostream& out, TriangleKind kind, std::size_t max_n);

struct ImportSummary {
  std::size_t rows_read = 0;
  std::size_t rows_accepted = 0;
};

/// Reads rows into the process-wide tables. Every row is checked against the
/// recurrence (from the rows accepted before it) and a mismatch throws
/// CacheError naming the line; rows preceding the bad one stay accepted.
/// Rows of one kind must appear in increasing n; gaps are filled by
/// recomputation.
ImportSummary import_rows(std::istream& in);

/// Parses without touching any table; for inspection and tests.
struct CacheLine {
  TriangleKind kind;
  std::size_t n = 0;
  Row row;
};
CacheLine parse_cache_line(const std::string& line, std::size_t line_number);

/// Environment variable naming the default cache path for the CLI.
inline constexpr const char* kCachePathEnv = "BLOCKPOLY_CACHE";

}  // namespace blockpoly
