#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rellich/cylinder.hpp"
#include "rellich/errors.hpp"
#include "rellich/mode_opt.hpp"
#include "rellich/params.hpp"
#include "rellich/quad_verify.hpp"
#include "rellich/rational.hpp"
#include "rellich/report.hpp"
#include "rellich/scan.hpp"
#include "rellich/spectra.hpp"
#include "rellich/verify.hpp"

namespace py = pybind11;
using namespace rellich;

namespace {

Rational alpha_arg(const py::object& alpha) {
  if (py::isinstance<py::str>(alpha)) return parse_rational(alpha.cast<std::string>());
  if (py::isinstance<py::int_>(alpha)) return Rational(alpha.cast<long long>());
  return to_rational(alpha.cast<double>());
}

Spectrum spectrum_for(int n, const std::string& domain, std::size_t count) {
  return make_spectrum(n, parse_domain(domain), count);
}

py::dict report_dict(const ConstantSummary& s) {
  const ConstantReport& r = s.report;
  py::dict d;
  d["n"] = s.n;
  d["alpha"] = to_string(s.alpha);
  d["domain"] = s.domain;
  d["delta_rad"] = r.delta_rad;
  d["delta_rad_exact"] = s.delta_rad_exact;
  d["M"] = r.M ? py::cast(*r.M) : py::none();
  d["M_exact"] = s.M_exact ? py::cast(*s.M_exact) : py::none();
  d["critical"] = r.critical ? py::cast(*r.critical) : py::none();
  d["critical_exact"] = s.critical_exact ? py::cast(*s.critical_exact) : py::none();
  d["argmin_lambda"] = r.argmin_lambda ? py::cast(*r.argmin_lambda) : py::none();
  d["regime"] = std::string(to_string(r.regime));
  d["positive"] = r.positive;
  d["certified_equality"] = std::string(to_string(r.certified_equality));
  d["certified"] = r.certified();
  return d;
}

}  // namespace

PYBIND11_MODULE(_rellich, m) {
  m.doc() = "Best constants of dilation-invariant Rellich inequalities";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def_readonly("n", &Params::n)
      .def_readonly("alpha", &Params::alpha)
      .def_readonly("gamma", &Params::gamma)
      .def_readonly("h", &Params::h)
      .def_readonly("A", &Params::A)
      .def_readonly("B", &Params::B)
      .def_readonly("C", &Params::C)
      .def_property_readonly("critical", &Params::critical)
      .def("__repr__", [](const Params& p) {
        return "Params(n=" + std::to_string(p.n) + ", alpha=" + to_string(p.alpha_exact) + ")";
      });

  m.def("derive", [](int n, const py::object& alpha) { return derive(n, alpha_arg(alpha)); },
        py::arg("n"), py::arg("alpha"),
        "Constants gamma, h, A, B, C for (n, alpha); alpha may be a float, int or 'p/q' string.");
  m.def("delta_rad", [](int n, const py::object& alpha) { return delta_rad(derive(n, alpha_arg(alpha))); },
        py::arg("n"), py::arg("alpha"));
  m.def("mode_value", [](int n, const py::object& alpha, double lambda) {
        return mode_value(derive(n, alpha_arg(alpha)), lambda);
      }, py::arg("n"), py::arg("alpha"), py::arg("lam"));
  m.def("critical_constant", [](int n) { return critical_constant(n); }, py::arg("n"));
  m.def("alpha_star_bound", &alpha_star_bound, py::arg("n"));
  m.def("phi", [](int n, const py::object& alpha, double t) { return phi(derive(n, alpha_arg(alpha)), t); },
        py::arg("n"), py::arg("alpha"), py::arg("t"));

  m.def("classify", [](int n, const py::object& alpha, const std::string& domain, std::size_t count) {
        const Rational a = alpha_arg(alpha);
        return report_dict(summarize_constant(n, a, spectrum_for(n, domain, count)));
      }, py::arg("n"), py::arg("alpha"), py::arg("domain") = "sphere", py::arg("count") = 16,
      "Classifies (n, alpha, domain); returns a dict mirroring the CLI JSON report.");

  m.def("spectrum", [](int n, const std::string& domain, std::size_t count) {
        return spectrum_for(n, domain, count).first(count);
      }, py::arg("n"), py::arg("domain") = "sphere", py::arg("count") = 8);

  m.def("minimize_mode", [](double A, double Bl, double Cl, double L, std::size_t N, const std::string& method) {
        ModeProblem prob;
        prob.A = A;
        prob.Bl = Bl;
        prob.Cl = Cl;
        prob.grid = ModeGrid{L, N};
        SolverOptions opts;
        if (method == "dense") opts.method = EigenMethod::Dense;
        else if (method == "banded") opts.method = EigenMethod::Banded;
        else if (method != "auto") throw InvalidArgument("method must be auto | banded | dense");
        const ModeMinimum r = minimize_mode(prob, opts);
        py::dict d;
        d["value"] = r.value;
        d["bound"] = r.bound;
        d["residual"] = r.residual;
        d["minimizer"] = r.minimizer;
        return d;
      }, py::arg("A"), py::arg("Bl"), py::arg("Cl"), py::arg("L") = 100.0, py::arg("N") = 8000,
      py::arg("method") = "auto",
      "Smallest discrete value of int|g''+Ag'-Bl g|^2 / int(|g'|^2+Cl|g|^2) on [-L, L].");

  m.def("scaled_family_value", [](int n, const py::object& alpha, double lambda, double eps) {
        return scaled_family_value(derive(n, alpha_arg(alpha)), lambda, eps);
      }, py::arg("n"), py::arg("alpha"), py::arg("lam"), py::arg("epsilon"));

  m.def("transform_check", []() {
        py::list out;
        for (const CorpusEntry& e : default_corpus()) {
          const EquivalenceReport r = xspace_equivalence_check(
              e.function, derive(e.function.n, e.alpha), full_sphere_spectrum(e.function.n, 4));
          py::dict d;
          d["name"] = e.function.name;
          d["n"] = e.function.n;
          d["alpha"] = e.alpha;
          d["mode"] = e.function.mode;
          d["x_ratio"] = r.x_ratio;
          d["cylinder_ratio"] = r.cylinder.ratio;
          d["discrepancy"] = r.discrepancy;
          out.append(d);
        }
        return out;
      }, "x-space vs cylinder quotients on the built-in corpus.");

  m.def("witness", [](int n, double alpha, double target) {
        const WitnessResult w = symmetry_breaking_witness(n, alpha, target);
        py::dict d;
        d["found"] = w.found();
        d["delta_rad"] = w.delta_rad;
        d["target_constant"] = w.target_constant;
        if (w.witness) {
          d["quotient"] = w.witness->quotient;
          d["epsilon"] = w.witness->epsilon;
          d["mode"] = w.witness->mode;
        } else {
          d["reason"] = w.certificate->reason;
          d["best_limit"] = w.certificate->best_limit;
        }
        return d;
      }, py::arg("n"), py::arg("alpha"), py::arg("target") = 1e-2);

  m.def("scan", [](int n, const std::string& from, const std::string& to, const std::string& step,
                   const std::string& domain, bool with_numeric, const std::string& format) {
        Config config;
        const auto alphas = alpha_grid(parse_rational(from), parse_rational(to), parse_rational(step));
        const ScanResult res =
            run_scan(n, alphas, spectrum_for(n, domain, config.spectrum_count), with_numeric, config);
        if (res.error) throw SolverError(*res.error);
        return render_scan(res.rows, parse_format(format));
      }, py::arg("n"), py::arg("alpha_from"), py::arg("alpha_to"), py::arg("step"),
      py::arg("domain") = "sphere", py::arg("with_numeric") = false, py::arg("format") = "csv",
      "Rendered scan (csv | json | table); alpha bounds are exact decimal or p/q strings.");

  m.def("verify", [](const std::string& suite) {
        py::list out;
        for (const Check& c : run_suite(parse_suite(suite))) {
          py::dict d;
          d["criterion"] = c.criterion;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      }, py::arg("suite") = "constants");
}
