#include "blockpoly/bfile.hpp"

#include <fstream>
#include <sstream>

namespace blockpoly {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty()) throw BFileError(number, "expected `index value`");
    if (fields >> extra) throw BFileError(number, "unexpected trailing field `" + extra + "`");
    BFileEntry e;
    e.line = number;
    try {
      const Int index = parse_int(index_text);
      if (index < 0 || !index.fits_ulong_p()) throw std::invalid_argument("index out of range");
      e.index = index.get_ui();
      e.value = parse_int(value_text);
    } catch (const std::invalid_argument& err) {
      throw BFileError(number, err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

BFileSequence BFileSequence::parse(const std::string& spec) {
  BFileSequence s;
  if (spec == "dtotal") return s;
  if (spec == "bell") {
    s.kind = Kind::Bell;
    return s;
  }
  const auto pos = spec.find(":col=");
  if (pos == std::string::npos) throw std::invalid_argument("unknown sequence `" + spec + "`");
  s.kind = Kind::Column;
  s.triangle = TriangleKind::parse(spec.substr(0, pos));
  const Int col = parse_int(spec.substr(pos + 5));
  if (col < 0 || !col.fits_ulong_p()) throw std::invalid_argument("bad column in `" + spec + "`");
  s.column = col.get_ui();
  return s;
}

Count BFileSequence::value(std::size_t index) const {
  switch (kind) {
    case Kind::DTotal:
      return d_total(index);
    case Kind::Bell:
      return bell(index);
    case Kind::Column:
      return blockpoly::triangle(triangle).at(index, column);
  }
  return 0;
}

CrosscheckReport crosscheck_bfile(std::istream& in, const BFileSequence& sequence) {
  CrosscheckReport report;
  const auto entries = parse_bfile(in);
  report.entries = entries.size();
  if (entries.empty()) report.warnings.push_back("no entries; agreement is vacuous");
  for (const auto& e : entries) {
    const Count expected = sequence.value(e.index);
    if (expected != e.value) {
      report.agree = false;
      report.first_mismatch = e;
      report.expected_at_mismatch = expected;
      break;
    }
  }
  return report;
}

CrosscheckReport crosscheck_bfile(const std::string& path, const BFileSequence& sequence) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return crosscheck_bfile(in, sequence);
}

void write_bfile(std::ostream& out, const BFileSequence& sequence, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i <= hi; ++i) out << i << ' ' << to_string(sequence.value(i)) << '\n';
}

}  // namespace blockpoly
