#include "blockpoly/bfile.hpp"
#include "blockpoly/bounds.hpp"
#include "blockpoly/modular.hpp"
#include "blockpoly/ogf.hpp"
#include "blockpoly/peaks.hpp"
#include "blockpoly/polynomials.hpp"
#include "blockpoly/real_roots.hpp"
#include "blockpoly/triangle.hpp"
#include "blockpoly/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace blockpoly;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

py::object to_py(const Ratio& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(Int(v.get_num())), to_py(Int(v.get_den())));
}

template <class T>
py::list to_py_list(const std::vector<T>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Ratio from_py_ratio(const py::object& v) {
  if (py::isinstance<py::str>(v)) return parse_ratio(v.cast<std::string>());
  const py::object f = py::module_::import("fractions").attr("Fraction")(v);
  return make_ratio(parse_int(py::str(f.attr("numerator")).cast<std::string>()),
                    parse_int(py::str(f.attr("denominator")).cast<std::string>()));
}

py::list brackets_to_py(const std::vector<RootBracket>& brackets) {
  py::list out;
  for (const auto& b : brackets) out.append(py::make_tuple(to_py(b.lo), to_py(b.hi)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_blockpoly, m) {
  m.doc() = "Exact counting triangles, generating polynomials and their roots";

  m.def("triangle", [](const std::string& kind, std::size_t n) { return to_py_list(triangle_row(TriangleKind::parse(kind), n)); },
        py::arg("kind"), py::arg("n"), "Row n of the triangle D, S, C, Dr:r or Dm:m.");
  m.def("d_count", [](std::size_t n, std::size_t k) { return to_py(d_count(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("d_total", [](std::size_t n) { return to_py(d_total(n)); }, py::arg("n"));
  m.def("bell", [](std::size_t n) { return to_py(bell(n)); }, py::arg("n"));
  m.def("d_poly", [](std::size_t n) { return to_py_list(d_poly(n).coeffs()); }, py::arg("n"),
        "Coefficients of D_n(x), lowest power first.");

  m.def(
      "d_poly_roots",
      [](std::size_t n, const py::object& eps) {
        std::vector<RootBracket> brackets = d_poly_roots(n);
        if (!eps.is_none()) {
          const Ratio e = from_py_ratio(eps);
          const IntPoly p = d_poly(n);
          for (auto& b : brackets) b = refine(b, p, e);
        }
        return brackets_to_py(brackets);
      },
      py::arg("n"), py::arg("eps") = py::none(), "Certified (lo, hi] brackets of the roots of D_n, descending.");

  m.def(
      "peak",
      [](std::size_t n) {
        const PeakReport r = darroch_locate(d_poly(n));
        py::dict d;
        d["n"] = n;
        d["mu"] = to_py(r.mu);
        d["peaks"] = r.peak_indices;
        d["darroch_ok"] = r.darroch_ok;
        return d;
      },
      py::arg("n"));

  m.def(
      "samuelson",
      [](std::size_t n, const py::object& eps) {
        const SamuelsonReport r = samuelson_vs_actual(n, from_py_ratio(eps));
        py::dict d;
        d["n"] = n;
        d["x_minus"] = r.x_minus;
        d["x_plus"] = r.x_plus;
        d["z_star"] = r.z_star_approx;
        d["z_star_bracket"] = py::make_tuple(to_py(r.z_star_bracket.lo), to_py(r.z_star_bracket.hi));
        d["estimate_over_actual"] = r.estimate_over_actual;
        d["dominates"] = r.dominates;
        return d;
      },
      py::arg("n"), py::arg("eps") = "1e-9");

  m.def(
      "ogf",
      [](std::size_t k) {
        const RatFunc f = f_k(k);
        return py::make_tuple(to_py_list(f.numerator().coeffs()), to_py_list(f.denominator().coeffs()));
      },
      py::arg("k"), "(numerator, denominator) coefficients of the ordinary generating function of D(., k).");
  m.def("ward_form", [](std::size_t k) { return render(ward_form(k)); }, py::arg("k"));
  m.def("series", [](std::size_t k, std::size_t n) { return to_py_list(series_prefix(f_k(k), n)); }, py::arg("k"),
        py::arg("n"));

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def(
      "check_congruences",
      [](std::uint64_t p) {
        py::dict d;
        for (const auto& c : check_prime_row_divisibility(p)) d[py::str(c.triangle + "_row")] = c.verified;
        d["d_total"] = check_d_total_congruence(p).verified;
        if (p > 2) d["bell"] = check_bell_congruence(p).verified;
        return d;
      },
      py::arg("p"));

  m.def(
      "verify",
      [](const std::string& suite, std::size_t max_n) {
        std::vector<SuiteResult> results;
        {
          py::gil_scoped_release release;
          results = run_suites(suite, max_n);
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["suite"] = r.name;
          d["passed"] = r.passed;
          d["checks"] = r.checks;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_n") = 30);

  m.def(
      "crosscheck",
      [](const std::string& path, const std::string& sequence) {
        const CrosscheckReport r = crosscheck_bfile(path, BFileSequence::parse(sequence));
        py::dict d;
        d["entries"] = r.entries;
        d["agree"] = r.agree;
        d["warnings"] = r.warnings;
        if (r.first_mismatch) {
          d["mismatch_index"] = r.first_mismatch->index;
          d["expected"] = to_py(r.expected_at_mismatch);
          d["found"] = to_py(r.first_mismatch->value);
        }
        return d;
      },
      py::arg("path"), py::arg("sequence") = "dtotal");
}
