// Python bindings: a thin, plain-types surface over the C++ core.  Structs
// come back as dicts/tuples so the module needs no Python-side classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvebound/classical.hpp"
#include "curvebound/heat_lab.hpp"
#include "curvebound/kernels.hpp"
#include "curvebound/psi.hpp"
#include "curvebound/roots.hpp"
#include "curvebound/scenario.hpp"
#include "curvebound/types.hpp"

namespace py = pybind11;
using namespace curvebound;

namespace {

py::dict report_to_dict(const MarginReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["min_margin"] = r.min_margin;
  d["argmin_node"] = r.argmin_node;
  d["argmin_time"] = r.argmin_time;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  return d;
}

py::list reports_to_list(const std::vector<MarginReport>& rows) {
  py::list out;
  for (const MarginReport& r : rows) out.append(report_to_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "concave heat-semigroup bound profile and its consequences";

  // kernels and the bound profile
  m.def("coth_kernel", &coth_kernel, py::arg("w"),
        "sqrt(w) coth(sqrt(w)), continued through w <= 0 down to -pi^2");
  m.def("coth_kernel_deriv", &coth_kernel_deriv, py::arg("w"));
  m.def("sinhc_kernel", &sinhc_kernel, py::arg("w"));
  m.def("phi", &phi, py::arg("rho"), py::arg("t"), py::arg("x"),
        "concave bound profile (rho != 0)");
  m.def("phi_prime", &phi_prime, py::arg("rho"), py::arg("t"), py::arg("x"));
  m.def("phi_tilde", &phi_tilde, py::arg("rho"), py::arg("t"), py::arg("x"));
  m.def("phi_domain_limit", &phi_domain_limit, py::arg("rho"), py::arg("t"));
  m.def("phi_large_time_limit", &phi_large_time_limit, py::arg("rho"), py::arg("x"));
  m.def(
      "liyau_rhs",
      [](double rho, double n, double t, double x) {
        return liyau_rhs(CurvatureDimension(rho, n), t, x);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("x"));

  // roots and envelopes
  m.def(
      "roots",
      [](double rho, double t) {
        const ProfileRoots r = find_roots(rho, t);
        py::dict d;
        if (r.negative_root) d["negative_root"] = *r.negative_root;
        if (r.positive_root) d["positive_root"] = *r.positive_root;
        if (r.sole_root) d["sole_root"] = *r.sole_root;
        return d;
      },
      py::arg("rho"), py::arg("t"));
  m.def(
      "root_enclosures",
      [](double rho, double t) {
        const ProfileRootEnclosures r = find_root_enclosures(rho, t);
        py::dict d;
        if (r.negative_root) d["negative_root"] = py::make_tuple(r.negative_root->lo, r.negative_root->hi);
        if (r.positive_root) d["positive_root"] = py::make_tuple(r.positive_root->lo, r.positive_root->hi);
        if (r.sole_root) d["sole_root"] = py::make_tuple(r.sole_root->lo, r.sole_root->hi);
        return d;
      },
      py::arg("rho"), py::arg("t"));
  m.def("positive_root_at_most_one", &positive_root_at_most_one, py::arg("rho"), py::arg("t"));
  m.def(
      "ultracontractive_envelope",
      [](double rho, double n, double t) {
        const UltracontractiveEnvelope e = ultracontractive_envelope(CurvatureDimension(rho, n), t);
        return py::make_tuple(e.lower, e.upper);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"));
  m.def(
      "gradient_decay_bound",
      [](double rho, double n, double t) {
        return gradient_decay_bound(CurvatureDimension(rho, n), t);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"));

  // gradient profile, conjugate, Harnack
  m.def(
      "psi_domain",
      [](double rho, double n, double t) {
        const PsiDomain d = psi_domain(CurvatureDimension(rho, n), t);
        return py::make_tuple(d.lo, d.hi);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"));
  m.def(
      "psi",
      [](double rho, double n, double t, double x) {
        return psi(CurvatureDimension(rho, n), t, x);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("x"));
  m.def(
      "psi_prime",
      [](double rho, double n, double t, double x) {
        return psi_prime(CurvatureDimension(rho, n), t, x);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("x"));
  m.def(
      "psi_prime_inverse",
      [](double rho, double n, double t, double z) {
        return psi_prime_inverse(CurvatureDimension(rho, n), t, z);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("z"));
  m.def(
      "legendre",
      [](double rho, double n, double t, double z) {
        const LegendreResult r = legendre_transform(CurvatureDimension(rho, n), t, z);
        return py::make_tuple(r.value, r.argmax);
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("z"));
  m.def(
      "harnack_exponent",
      [](double rho, double n, double s, double t, double d) {
        const HarnackExponent e = harnack_exponent(CurvatureDimension(rho, n), HarnackQuery{s, t, d});
        return py::make_tuple(e.value, e.approximate);
      },
      py::arg("rho"), py::arg("n"), py::arg("s"), py::arg("t"), py::arg("d"));
  m.def(
      "heat_kernel_ratio_bound",
      [](double rho, double n, double s, double t, double d) {
        return heat_kernel_ratio_bound(CurvatureDimension(rho, n), HarnackQuery{s, t, d});
      },
      py::arg("rho"), py::arg("n"), py::arg("s"), py::arg("t"), py::arg("d"));

  // classical comparisons
  m.def(
      "linearized_bound_hyperbolic",
      [](double rho, double t, double alpha) {
        const LinearBound b = linearized_bound_hyperbolic(rho, t, alpha);
        return py::make_tuple(b.a, b.b);
      },
      py::arg("rho"), py::arg("t"), py::arg("alpha"));
  m.def(
      "linearized_bound_trigonometric",
      [](double rho, double t, double beta) {
        const LinearBound b = linearized_bound_trigonometric(rho, t, beta);
        return py::make_tuple(b.a, b.b);
      },
      py::arg("rho"), py::arg("t"), py::arg("beta"));
  m.def("bound_classical_liyau", &bound_classical_liyau, py::arg("n"), py::arg("t"), py::arg("v"));
  m.def("li_xu_harnack_exponent", &li_xu_harnack_exponent, py::arg("n"), py::arg("K"),
        py::arg("s"), py::arg("t"), py::arg("d"));
  m.def(
      "dominance_report",
      [](double rho, double n, double t, int grid_size) {
        return reports_to_list(dominance_report(CurvatureDimension(rho, n), t, grid_size));
      },
      py::arg("rho"), py::arg("n"), py::arg("t"), py::arg("grid_size") = 400);

  // scenarios
  m.def(
      "run_scenario",
      [](const std::string& path) { return reports_to_list(run_scenario(load_scenario_file(path))); },
      py::arg("path"), "run the checks of a key=value scenario config file");
}
