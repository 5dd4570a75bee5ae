#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>

#include "assoc_lab/construct.hpp"
#include "assoc_lab/io.hpp"
#include "assoc_lab/representations.hpp"
#include "assoc_lab/transcendental.hpp"

using namespace assoc_lab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out, j);
}

bool all_ok(const json& reports) {
  for (const auto& r : reports)
    if (!r["pass"].get<bool>()) return false;
  return true;
}

double default_tol(const AnyCandidate& c) { return std::holds_alternative<AssociatorCandidate<Rational>>(c) ? 0.0 : 1e-6; }

int cmd_rational(int m, int N, const std::string& lambda_text, const std::string& out, const std::string& report) {
  if (m < 3) throw InvalidInput("m must be at least 3");
  if (N < 1) throw InvalidInput("degree must be at least 1");
  Rational lambda;
  try {
    lambda = parse_rational(lambda_text);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  RationalBuild b;
  try {
    b = build_rational(m, Rational(1), N);
  } catch (const InconsistentSystem& e) {
    std::cerr << "assoc_lab: " << e.what() << "\n";
    return kFail;
  }
  auto c = lambda == 1 ? b.candidate : scale(b.candidate, lambda);
  json diag = json::array();
  for (const auto& s : b.steps)
    diag.push_back({{"degree", s.diagnostics.degree},
                    {"window_start", s.diagnostics.window_start},
                    {"unknowns", s.diagnostics.unknowns},
                    {"equations", s.diagnostics.equations},
                    {"rank", s.diagnostics.rank}});
  json prov{{"tie_break", kTieBreakRule}, {"degrees", diag}};
  if (lambda != 1) prov["scaled_from_lambda"] = "1/1";
  auto file = associator_to_json(c, prov);
  auto reports = run_checks(c, {"grouplike", "duality", "demi_tour", "mirror"}, 0.0);
  if (out.empty()) {
    emit({{"associator", file}, {"reports", reports}}, report);
  } else {
    write_json_file(out, file);
    emit({{"associator", out}, {"reports", reports}}, report);
  }
  return all_ok(reports) ? kPass : kFail;
}

int cmd_phi0(int m, int N, int K, double tol, const std::string& out, const std::string& report) {
  if (m < 3) throw InvalidInput("m must be at least 3");
  if (N < 0) throw InvalidInput("degree must be non-negative");
  if (K < 1) throw InvalidInput("x-order must be positive");
  Phi0Options opt;
  opt.N = N;
  opt.K = K;
  Phi0Result r;
  try {
    r = phi0(m, opt);
  } catch (const ConvergenceError& e) {
    std::cerr << "assoc_lab: " << e.what() << "\n";
    return kFail;
  }
  auto c = make_candidate(m, transcendental_lambda(), r.phi);
  double demi = demi_tour_residual(c).max_abs();
  double dual = duality_residual(c, Duality::J).max_abs();
  json conv{{"tail_plus", r.tail_plus},
            {"tail_minus", r.tail_minus},
            {"tail_by_degree", r.tail_by_degree},
            {"x_order", K},
            {"demi_tour_residual", demi},
            {"duality_residual", dual},
            {"tol", tol}};
  json prov{{"method", "fuchsian"}, {"x_order", K}};
  auto file = associator_to_json(c, prov);
  json reports = json::array();
  reports.push_back(report_to_json(check_grouplike_report(c.phi, tol)));
  reports.push_back(report_to_json(check_duality_report(c, tol, Duality::J)));
  reports.push_back(report_to_json(check_demi_tour_report(c, tol)));
  json doc{{"convergence", conv}, {"reports", reports}};
  if (out.empty()) {
    doc["associator"] = file;
  } else {
    write_json_file(out, file);
    doc["associator"] = out;
  }
  emit(doc, report);
  return all_ok(reports) ? kPass : kFail;
}

int cmd_verify(const std::string& in, std::vector<std::string> checks, std::optional<double> tol) {
  auto any = associator_from_json(read_json_file(in));
  if (checks.empty()) checks = all_check_names();
  double t = tol.value_or(default_tol(any));
  json reports = run_checks(any, checks, t);
  std::cout << reports.dump(2) << "\n";
  return all_ok(reports) ? kPass : kFail;
}

int cmd_morphism_verify(const std::string& in, std::optional<double> tol) {
  auto any = associator_from_json(read_json_file(in));
  double t = tol.value_or(default_tol(any));
  return std::visit(
      [&](const auto& c) {
        json reports = json::array();
        for (const auto& r : check_suite(c, t)) reports.push_back(report_to_json(r));
        if (!all_ok(reports)) {
          std::cerr << "assoc_lab: candidate rejected, it fails the associator equations\n";
          std::cout << reports.dump(2) << "\n";
          return kFail;
        }
        auto M = build_morphism(c, true, false);
        for (const auto& l : verify_artin(M, t)) reports.push_back(check_to_json(l));
        reports.push_back(check_to_json(verify_center(M, t)));
        for (const auto& l : pure_braid_tables(c, t)) reports.push_back(check_to_json(l));
        std::cout << reports.dump(2) << "\n";
        return all_ok(reports) ? kPass : kFail;
      },
      any);
}

void aba_row(int m, int j, double alpha) {
  std::cout << std::setprecision(15) << alpha << "," << std::cos(alpha) << ",";
  try {
    auto r = aba_obstruction(m, j, alpha);
    const auto& e = r.spectrum;
    std::cout << e[0].real() << "," << e[0].imag() << "," << e[1].real() << "," << e[1].imag() << "," << r.unitarizable << ","
              << r.spectral_bound_ok << "\n";
  } catch (const std::domain_error&) {
    std::cout << "nan,nan,nan,nan,0,0\n";
  }
}

int cmd_rep(int m, int j, std::optional<double> alpha, std::optional<int> sweep, int h_order, const std::string& assoc) {
  if (m < 3) throw InvalidInput("m must be at least 3");
  if (j < 1 || j >= m) throw InvalidInput("j must lie in 1..m-1");
  if (h_order < 0) throw InvalidInput("h-order must be non-negative");
  if (!assoc.empty()) {
    auto c = as_complex(associator_from_json(read_json_file(assoc)));
    if (c.m != m) throw InvalidInput("associator file has a different m");
    if (h_order > c.truncation()) throw InvalidInput("h-order exceeds the associator truncation");
    auto M = build_morphism(c, true, false);
    auto rep = monodromy_rep(M, reflection_rep(m), h_order);
    std::cout << "generator,h_power,eig_a_re,eig_a_im,eig_b_re,eig_b_im,hecke_residual\n";
    for (auto [name, img] : {std::pair{"sigma", &rep.sigma}, std::pair{"tau", &rep.tau}}) {
      auto ev = eigen_series(*img);
      double res = hecke_factor_residual(*img, c.lambda);
      for (int k = 0; k <= h_order; ++k)
        std::cout << std::setprecision(15) << name << "," << k << "," << ev[0][k].real() << "," << ev[0][k].imag() << ","
                  << ev[1][k].real() << "," << ev[1][k].imag() << "," << res << "\n";
    }
    return kPass;
  }
  if (alpha.has_value() == sweep.has_value()) throw InvalidInput("give exactly one of --alpha and --sweep");
  std::cout << "alpha,cos_alpha,ev0_re,ev0_im,ev1_re,ev1_im,unitarizable,spectral_bound_ok\n";
  if (alpha) {
    aba_row(m, j, *alpha);
  } else {
    if (*sweep < 2) throw InvalidInput("sweep needs at least 2 points");
    for (int k = 0; k < *sweep; ++k) aba_row(m, j, std::numbers::pi * k / (*sweep - 1));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral braid associators: construction, verification, representations"};
  app.require_subcommand(1);
  std::function<int()> action;

  int m = 3, N = 4, K = 64, j = 1, h_order = 4;
  double tol = 1e-5;
  std::string lambda = "1", out, report, in, assoc;
  std::vector<std::string> checks;
  std::optional<double> tol_opt, alpha;
  std::optional<int> sweep;

  auto* rational = app.add_subcommand("rational", "Solve for a rational associator degree by degree");
  rational->add_option("--m", m, "Dihedral parameter")->required();
  rational->add_option("--degree", N, "Truncation degree")->required();
  rational->add_option("--lambda", lambda, "Parameter, as p/q")->capture_default_str();
  rational->add_option("--out", out, "Associator JSON file");
  rational->add_option("--report", report, "Report JSON file (default stdout)");
  rational->callback([&] { action = [&] { return cmd_rational(m, N, lambda, out, report); }; });

  auto* ph = app.add_subcommand("phi0", "Compute the transcendental associator from the Fuchsian system");
  ph->add_option("--m", m, "Dihedral parameter")->required();
  ph->add_option("--degree", N, "Truncation degree")->capture_default_str();
  ph->add_option("--xorder", K, "Order of the local x-expansions")->capture_default_str();
  ph->add_option("--tol", tol, "Tolerance for the equation checks")->capture_default_str();
  ph->add_option("--out", out, "Associator JSON file");
  ph->add_option("--report", report, "Report JSON file (default stdout)");
  ph->callback([&] { action = [&] { return cmd_phi0(m, N, K, tol, out, report); }; });

  auto* verify = app.add_subcommand("verify", "Check an associator file");
  verify->add_option("--in", in, "Associator JSON file")->required();
  verify->add_option("--checks", checks, "grouplike, duality, demi-tour, mirror, artin, center, tables")->delimiter(',');
  verify->add_option("--tol", tol_opt, "Tolerance (default 0 rational, 1e-6 complex)");
  verify->callback([&] { action = [&] { return cmd_verify(in, checks, tol_opt); }; });

  auto* morph = app.add_subcommand("morphism", "Braid group morphism built from an associator");
  morph->require_subcommand(1);
  auto* mverify = morph->add_subcommand("verify", "Artin relation, center, O-image and pure braid tables");
  mverify->add_option("--in", in, "Associator JSON file")->required();
  mverify->add_option("--tol", tol_opt, "Tolerance (default 0 rational, 1e-6 complex)");
  mverify->callback([&] { action = [&] { return cmd_morphism_verify(in, tol_opt); }; });

  auto* rep = app.add_subcommand("rep", "Hecke representations and monodromy spectra, CSV output");
  rep->add_option("--m", m, "Dihedral parameter")->required();
  rep->add_option("--j", j, "Index of the 2-dimensional representation")->capture_default_str();
  rep->add_option("--alpha", alpha, "Hecke parameter u = exp(i alpha)");
  rep->add_option("--sweep", sweep, "Number of alpha values on [0, pi]");
  rep->add_option("--h-order", h_order, "Order in h of the monodromy images")->capture_default_str();
  rep->add_option("--assoc", assoc, "Associator JSON; prints monodromy spectra instead");
  rep->callback([&] { action = [&] { return cmd_rep(m, j, alpha, sweep, h_order, assoc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "assoc_lab: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "assoc_lab: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "assoc_lab: " << e.what() << "\n";
    return kFail;
  }
}
