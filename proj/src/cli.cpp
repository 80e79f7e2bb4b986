#include "blockpoly/cli.hpp"

#include "blockpoly/bfile.hpp"
#include "blockpoly/bounds.hpp"
#include "blockpoly/cache.hpp"
#include "blockpoly/ogf.hpp"
#include "blockpoly/peaks.hpp"
#include "blockpoly/polynomials.hpp"
#include "blockpoly/real_roots.hpp"
#include "blockpoly/triangle.hpp"
#include "blockpoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace blockpoly::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fixed_digits(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

Ratio positive_eps(const std::string& text) {
  Ratio eps = parse_ratio(text);
  if (eps <= 0) throw UsageError("--eps must be positive");
  return eps;
}

json string_array(const std::vector<Int>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

void emit_values(std::ostream& out, const std::string& format, const std::vector<Int>& values,
                 const std::string& index_name) {
  if (format == "json") {
    out << string_array(values).dump() << '\n';
  } else if (format == "csv") {
    out << index_name << ",value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << to_string(values[i]) << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << to_string(values[i]);
    out << '\n';
  }
}

std::string cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCachePathEnv)) return env;
  throw UsageError(std::string("no cache path: pass --path or set ") + kCachePathEnv);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting triangles, generating polynomials and their roots", "blockpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string kind_label = "D";
  std::size_t n = 0, k = 0, max_n = 60;
  std::string eps_text;

  auto* table = app.add_subcommand("table", "Row n of a counting triangle");
  table->add_option("--kind", kind_label, "D, S, C, Dr:r or Dm:m")->capture_default_str();
  table->add_option("--n", n, "Row index")->required()->check(CLI::Range(0, 5000));

  auto* poly = app.add_subcommand("poly", "Generating polynomial of row n");
  poly->add_option("--kind", kind_label, "D, S, C, Dr:r or Dm:m")->capture_default_str();
  poly->add_option("--n", n, "Row index")->required()->check(CLI::Range(0, 5000));

  auto* roots = app.add_subcommand("roots", "Certified root brackets of a row polynomial");
  roots->add_option("--kind", kind_label, "D, S, C, Dr:r or Dm:m")->capture_default_str();
  roots->add_option("--n", n, "Row index")->required()->check(CLI::Range(1, 1000));
  roots->add_option("--eps", eps_text, "Absolute bracket width (exact rational or decimal)");

  auto* peak = app.add_subcommand("peak", "Coefficient peak, mean and identities of D_n");
  peak->add_option("--n", n, "Row index")->required()->check(CLI::Range(4, 2000));

  auto* bound = app.add_subcommand("bound", "Samuelson bound against the certified leftmost root");
  bound->add_option("--n", n, "Row index")->check(CLI::Range(4, 1000));
  std::vector<std::size_t> probe;
  bound->add_option("--probe", probe, "Comma-separated n >= 10 for the scaling probe")->delimiter(',');
  std::string bound_eps = "1e-9";
  bound->add_option("--eps", bound_eps, "Relative width of the leftmost root bracket")->capture_default_str();

  auto* series = app.add_subcommand("series", "Ordinary generating function f_k and its series");
  series->add_option("--k", k, "Number of blocks")->required()->check(CLI::Range(1, 40));
  series->add_option("--n", n, "Highest coefficient")->check(CLI::Range(0, 2000));
  bool ward = false;
  series->add_flag("--ward", ward, "Print the factored form");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  verify->add_option("--suite", suite, "Suite name or all")->capture_default_str();
  verify->add_option("--max-n", max_n, "Largest n")->capture_default_str()->check(CLI::Range(5, 1000));

  auto* cache = app.add_subcommand("cache", "Export or import memoized rows");
  cache->require_subcommand(1);
  std::string path;
  auto* cache_export = cache->add_subcommand("export", "Write rows 0..max-n");
  cache_export->add_option("--kind", kind_label, "D, S, C, Dr:r or Dm:m")->capture_default_str();
  cache_export->add_option("--max-n", max_n, "Largest row")->capture_default_str()->check(CLI::Range(0, 5000));
  cache_export->add_option("--path", path, std::string("Cache file (default $") + kCachePathEnv + ")");
  auto* cache_import = cache->add_subcommand("import", "Read and verify rows");
  cache_import->add_option("--path", path, std::string("Cache file (default $") + kCachePathEnv + ")");

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare a b-file against exact values");
  std::string sequence_spec = "dtotal";
  crosscheck->add_option("--path", path, "b-file")->required();
  crosscheck->add_option("--sequence", sequence_spec, "dtotal, bell or KIND:col=k")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) {
      const TriangleKind kind = TriangleKind::parse(kind_label);
      emit_values(out, format, triangle_row(kind, n), "k");
      return kExitOk;
    }

    if (poly->parsed()) {
      const TriangleKind kind = TriangleKind::parse(kind_label);
      const IntPoly p = row_poly(triangle_row(kind, n));
      if (format == "text")
        out << to_string(p) << '\n';
      else
        emit_values(out, format, p.coeffs(), "power");
      return kExitOk;
    }

    if (roots->parsed()) {
      const TriangleKind kind = TriangleKind::parse(kind_label);
      std::vector<RootBracket> brackets = kind == TriangleKind::d() ? d_poly_roots(std::max<std::size_t>(n, 2))
                                                                    : isolate_roots(row_poly(triangle_row(kind, n)));
      if (kind == TriangleKind::d() && n < 2) brackets.clear();
      const IntPoly p = row_poly(triangle_row(kind, n));
      if (!eps_text.empty()) {
        const Ratio eps = positive_eps(eps_text);
        for (auto& b : brackets) b = refine(b, p, eps);
      }
      if (format == "json") {
        out << to_json(brackets) << '\n';
      } else if (format == "csv") {
        out << "i,lo,hi,approx\n";
        for (std::size_t i = 0; i < brackets.size(); ++i)
          out << i << ',' << to_string(brackets[i].lo) << ',' << to_string(brackets[i].hi) << ','
              << format_double(brackets[i].approx()) << '\n';
      } else {
        for (const auto& b : brackets)
          out << "(" << to_string(b.lo) << ", " << to_string(b.hi) << "]  ~ " << fixed_digits(b.approx(), 12) << '\n';
      }
      return kExitOk;
    }

    if (peak->parsed()) {
      if (format == "json") {
        out << peak_report_json(n) << '\n';
        return kExitOk;
      }
      const PeakReport r = darroch_locate(d_poly(n));
      const BellIdentityReport ids = verify_bell_identities(n);
      std::string peaks;
      for (auto m : r.peak_indices) peaks += (peaks.empty() ? "" : ",") + std::to_string(m);
      if (format == "csv") {
        out << "n,mu,mu_approx,peaks,darroch_ok\n"
            << n << ',' << to_string(r.mu) << ',' << format_double(to_double(r.mu)) << ",\"" << peaks << "\","
            << (r.darroch_ok ? "true" : "false") << '\n';
      } else {
        out << "n = " << n << '\n'
            << "mean = " << to_string(r.mu) << " ~ " << fixed_digits(to_double(r.mu), 10) << '\n'
            << "peaks = " << peaks << '\n'
            << "darroch_ok = " << (r.darroch_ok ? "true" : "false") << '\n'
            << "identities = " << ids.a << ids.b << ids.c << '\n';
        if (n >= 10) {
          const PeakAsymptoticReport a = verify_peak_asymptotic(n);
          out << "argmax S(n,.) = " << a.stirling_argmax << '\n'
              << "lambert approx = " << fixed_digits(a.lambert_approx, 6) << '\n'
              << "e^r - 1 = " << fixed_digits(a.stirling_approx, 6) << '\n';
        }
      }
      return (r.darroch_ok && ids.a && ids.b && ids.c) ? kExitOk : kExitFailure;
    }

    if (bound->parsed()) {
      const Ratio eps = positive_eps(bound_eps);
      if (!probe.empty()) {
        const ScalingProbe result = leftmost_scaling_probe(probe, eps);
        if (format == "json") {
          json j = json::array();
          for (const auto& row : result.rows)
            j.push_back({{"n", row.n}, {"parity", row.even ? "even" : "odd"}, {"x_minus", row.x_minus},
                         {"z_star", row.z_star}, {"ratio", row.ratio}});
          out << j.dump() << '\n';
        } else {
          write_scaling_csv(out, result);
          if (format == "text")
            for (const auto& fit : result.fits)
              if (fit.c) out << "# " << (fit.even ? "even" : "odd") << " fit c = " << format_double(*fit.c) << '\n';
        }
        return kExitOk;
      }
      if (n == 0) throw UsageError("bound needs --n or --probe");
      const SamuelsonReport r = samuelson_vs_actual(n, eps);
      if (format == "json") {
        out << to_json(r) << '\n';
      } else if (format == "csv") {
        out << "n,z_star,x_minus,estimate_over_actual\n"
            << n << ',' << format_double(r.z_star_approx) << ',' << format_double(r.x_minus) << ','
            << format_double(r.estimate_over_actual) << '\n';
      } else {
        out << "n = " << n << '\n'
            << "|z*| = " << fixed_digits(std::abs(r.z_star_approx), 10) << '\n'
            << "Samuelson estimate |x-| = " << fixed_digits(std::abs(r.x_minus), 10) << '\n'
            << "estimate/actual = " << fixed_digits(r.estimate_over_actual, 10) << '\n';
      }
      return (r.dominates && r.coefficient_ratios_ok) ? kExitOk : kExitFailure;
    }

    if (series->parsed()) {
      const RatFunc f = f_k(k);
      if (ward) {
        const WardForm w = ward_form(k);
        if (format == "json")
          out << to_json(w) << '\n';
        else
          out << render(w) << '\n';
        return kExitOk;
      }
      const auto coeffs = series_prefix(f, n);
      if (format == "json") {
        json j = json::parse(to_json(f));
        json arr = json::array();
        for (const auto& c : coeffs) arr.push_back(to_string(c));
        j["series"] = arr;
        out << j.dump() << '\n';
      } else if (format == "csv") {
        out << "n,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << to_string(coeffs[i]) << '\n';
      } else {
        out << "f_" << k << " = (" << to_string(f.numerator()) << ")/(" << to_string(f.denominator()) << ")\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << to_string(coeffs[i]);
        out << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      if (!is_suite_name(suite)) throw UsageError("unknown suite `" + suite + "`");
      const auto results = run_suites(suite, max_n);
      bool ok = true;
      json j = json::array();
      if (format == "csv") out << "suite,passed,checks,seconds\n";
      for (const auto& r : results) {
        ok = ok && r.passed;
        if (format == "json") {
          j.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}});
        } else if (format == "csv") {
          out << r.name << ',' << (r.passed ? "true" : "false") << ',' << r.checks << ','
              << fixed_digits(r.seconds, 4) << '\n';
        } else {
          out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, "
              << fixed_digits(r.seconds, 3) << " s)\n";
          for (const auto& f : r.failures) out << "  " << f << '\n';
        }
      }
      if (format == "json") out << j.dump() << '\n';
      return ok ? kExitOk : kExitFailure;
    }

    if (cache_export->parsed()) {
      const std::string file = cache_path(path);
      std::ofstream f(file);
      if (!f) throw std::runtime_error("cannot write " + file);
      export_rows(f, TriangleKind::parse(kind_label), max_n);
      out << "exported rows 0.." << max_n << " of " << kind_label << " to " << file << '\n';
      return kExitOk;
    }

    if (cache_import->parsed()) {
      const std::string file = cache_path(path);
      std::ifstream f(file);
      if (!f) throw UsageError("cannot read " + file);
      const ImportSummary s = import_rows(f);
      out << "read " << s.rows_read << " rows, accepted " << s.rows_accepted << '\n';
      return kExitOk;
    }

    if (crosscheck->parsed()) {
      const BFileSequence seq = BFileSequence::parse(sequence_spec);
      std::ifstream f(path);
      if (!f) throw UsageError("cannot read " + path);
      const CrosscheckReport r = crosscheck_bfile(f, seq);
      for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      if (format == "json") {
        json j{{"entries", r.entries}, {"agree", r.agree}};
        if (r.first_mismatch)
          j["mismatch"] = {{"index", r.first_mismatch->index},
                           {"line", r.first_mismatch->line},
                           {"found", to_string(r.first_mismatch->value)},
                           {"expected", to_string(r.expected_at_mismatch)}};
        out << j.dump() << '\n';
      } else if (r.agree) {
        out << "agree: " << r.entries << " entries\n";
      } else {
        out << "mismatch at index " << r.first_mismatch->index << " (line " << r.first_mismatch->line
            << "): found " << to_string(r.first_mismatch->value) << ", expected "
            << to_string(r.expected_at_mismatch) << '\n';
      }
      return r.agree ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace blockpoly::cli
