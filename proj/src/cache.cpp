#include "blockpoly/cache.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace blockpoly {

void export_rows(std::ostream& out, TriangleKind kind, std::size_t max_n) {
  const auto& table = triangle(kind);
  const std::string label = kind.label();
  for (std::size_t n = 0; n <= max_n; ++n) {
    out << label << ' ' << n;
    for (const auto& v : table.row(n)) out << ' ' << v.get_str(10);
    out << '\n';
  }
}

CacheLine parse_cache_line(const std::string& line, std::size_t line_number) {
  std::istringstream fields(line);
  std::string label, index;
  if (!(fields >> label >> index)) throw CacheError(line_number, "expected `KIND n k0 k1 ...`");
  CacheLine out;
  try {
    out.kind = TriangleKind::parse(label);
    Int n = parse_int(index);
    if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument("row index out of range");
    out.n = n.get_ui();
    std::string token;
    while (fields >> token) {
      Int v = parse_int(token);
      if (v < 0) throw std::invalid_argument("negative entry");
      out.row.push_back(std::move(v));
    }
  } catch (const std::invalid_argument& e) {
    throw CacheError(line_number, e.what());
  }
  if (out.row.size() != out.kind.max_k(out.n) + 1)
    throw CacheError(line_number, "row " + std::to_string(out.n) + " of " + label + " must have " +
                                      std::to_string(out.kind.max_k(out.n) + 1) + " entries");
  return out;
}

ImportSummary import_rows(std::istream& in) {
  ImportSummary summary;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    CacheLine parsed = parse_cache_line(line, line_number);
    ++summary.rows_read;
    auto& table = mutable_triangle(parsed.kind);
    if (parsed.n > 0 && table.size() < parsed.n) table.row(parsed.n - 1);
    if (!table.append_verified(parsed.n, parsed.row))
      throw CacheError(line_number, "row " + std::to_string(parsed.n) + " of " + parsed.kind.label() +
                                        " does not satisfy the recurrence");
    ++summary.rows_accepted;
  }
  return summary;
}

}  // namespace blockpoly
