#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "assoc_lab/construct.hpp"
#include "assoc_lab/io.hpp"
#include "assoc_lab/representations.hpp"
#include "assoc_lab/transcendental.hpp"

namespace py = pybind11;
using namespace assoc_lab;

namespace {

std::string build_rational_json(int m, int degree, const std::string& lambda) {
  auto b = build_rational(m, Rational(1), degree);
  Rational lam = parse_rational(lambda);
  auto c = lam == 1 ? b.candidate : scale(b.candidate, lam);
  return associator_to_json(c, json{{"tie_break", kTieBreakRule}}).dump();
}

std::string verify_json(const std::string& text, std::vector<std::string> checks, std::optional<double> tol) {
  auto any = associator_from_json(json::parse(text));
  if (checks.empty()) checks = all_check_names();
  double t = tol.value_or(std::holds_alternative<AssociatorCandidate<Rational>>(any) ? 0.0 : 1e-6);
  return run_checks(any, checks, t).dump();
}

std::string phi0_json(int m, int degree, int x_order) {
  Phi0Options opt;
  opt.N = degree;
  opt.K = x_order;
  auto r = phi0(m, opt);
  return associator_to_json(make_candidate(m, transcendental_lambda(), r.phi), json{{"method", "fuchsian"}, {"x_order", x_order}})
      .dump();
}

std::vector<std::vector<Complex>> to_rows(const CMat& M) {
  std::vector<std::vector<Complex>> rows(M.n, std::vector<Complex>(M.n));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) rows[i][j] = M(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<InconsistentSystem>(m, "InconsistentSystem", PyExc_RuntimeError);
  m.attr("TIE_BREAK_RULE") = kTieBreakRule;

  m.def("build_rational_json", &build_rational_json, py::arg("m"), py::arg("degree"), py::arg("lam") = "1");
  m.def("verify_json", &verify_json, py::arg("text"), py::arg("checks") = std::vector<std::string>{},
        py::arg("tol") = std::nullopt);
  m.def("phi0_json", &phi0_json, py::arg("m"), py::arg("degree") = 4, py::arg("x_order") = 64);
  m.def("half_turn_check", [](int mm, int N, int K, double tol) {
    auto r = half_turn_check(mm, N, K, tol);
    return py::dict(py::arg("pass") = r.pass, py::arg("residual") = r.residual, py::arg("duality_residual") = r.duality_residual);
  }, py::arg("m"), py::arg("degree") = 4, py::arg("x_order") = 64, py::arg("tol") = 1e-5);
  m.def("bridge_check_m3", [](int N, double tol) {
    auto r = bridge_check_m3(N, tol);
    return py::dict(py::arg("pass") = r.pass, py::arg("residual") = r.residual);
  }, py::arg("degree") = 4, py::arg("tol") = 1e-6);
  m.def("aba_obstruction", [](int mm, int j, double alpha) {
    auto r = aba_obstruction(mm, j, alpha);
    return py::dict(py::arg("spectrum") = r.spectrum, py::arg("unitarizable") = r.unitarizable,
                    py::arg("spectral_bound_ok") = r.spectral_bound_ok);
  }, py::arg("m"), py::arg("j"), py::arg("alpha"));
  m.def("hecke_rep", [](int mm, int j, Complex v) {
    auto H = hecke_rep(mm, j, v);
    return py::make_tuple(to_rows(H.sigma), to_rows(H.tau));
  }, py::arg("m"), py::arg("j"), py::arg("v"));
  m.def("reflection_rep", [](int mm) {
    auto R = reflection_rep(mm);
    return py::make_tuple(to_rows(R.s), to_rows(R.omega));
  }, py::arg("m"));
  m.def("lyndon_words", &lyndon_words, py::arg("generators"), py::arg("degree"));
  m.def("witt_number", &witt_number, py::arg("generators"), py::arg("degree"));
  m.def("cot_taylor", &cot_taylor, py::arg("a"), py::arg("order"));
}
