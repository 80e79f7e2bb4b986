#pragma once

// Cross-checking against b-files: plain-text `index value` lines, blank
// lines and `#` comments ignored.

#include "blockpoly/numeric.hpp"
#include "blockpoly/triangle.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockpoly {

class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFileEntry {
  std::size_t index = 0;
  Int value;
  std::size_t line = 0;
};

/// Throws BFileError on malformed lines.
std::vector<BFileEntry> parse_bfile(std::istream& in);

/// What a b-file is compared against.
struct BFileSequence {
  enum class Kind { DTotal, Bell, Column } kind = Kind::DTotal;
  /// For Column: T(index, column) of the triangle.
  TriangleKind triangle;
  std::size_t column = 0;

  /// "dtotal", "bell", or "<KIND>:col=<k>" such as "D:col=2" or "Dm:3:col=2".
  static BFileSequence parse(const std::string& spec);
  Count value(std::size_t index) const;
};

struct CrosscheckReport {
  std::size_t entries = 0;
  bool agree = true;
  std::optional<BFileEntry> first_mismatch;
  Count expected_at_mismatch;
  std::vector<std::string> warnings;
};

CrosscheckReport crosscheck_bfile(std::istream& in, const BFileSequence& sequence);
/// Throws std::runtime_error if the file cannot be opened.
CrosscheckReport crosscheck_bfile(const std::string& path, const BFileSequence& sequence);

/// Writes `index value` lines for indices lo..hi.
void write_bfile(std::ostream& out, const BFileSequence& sequence, std::size_t lo, std::size_t hi);

}  // namespace blockpoly
