#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "assoc_lab/associator.hpp"
#include "assoc_lab/transcendental.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

const double kLogBeta = std::log(2.0 / std::sqrt(3.0));

}  // namespace

TEST_CASE("cot Taylor coefficients") {
  for (double a : {0.4, 1.0, 2.2}) {
    auto c = cot_taylor(a, 40);
    for (double x : {-0.1, 0.05, 0.2}) CHECK(horner(c, x) == doctest::Approx(1.0 / std::tan(a + x)).epsilon(1e-12));
  }
  auto r = cot_regular_taylor(30);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(-1.0 / 3));
  CHECK(r[3] == doctest::Approx(-1.0 / 45));
  for (double x : {0.1, 0.5, -0.8}) CHECK(horner(r, x) == doctest::Approx(1.0 / std::tan(x) - 1.0 / x).epsilon(1e-10));
}

TEST_CASE("local problems") {
  auto lp = local_problem(4, 1, Side::Plus, 3, 8);
  CHECK(distance(lp.A, SC::gen(4, 3, 1)) == 0.0);
  CHECK(lp.x_order() == 8);
  CHECK(lp.c[0].constant() == Complex(0.0));
  auto sol = local_solution(3, 0, Side::Minus, 3, 24);
  CHECK(fuchs_residual(sol.problem, sol.p) < 1e-12);
}

TEST_CASE("Φ₀ at m = 3: low-degree coefficients") {
  Phi0Options opt;
  opt.N = 3;
  auto res = phi0(3, opt);
  CHECK(is_grouplike(res.phi, 1e-10));
  CHECK(res.tail_by_degree.size() == 4);
  auto lg = series_log(res.phi);
  CHECK(std::abs(lg.coeff({0}) - kLogBeta) < 1e-10);
  CHECK(std::abs(lg.coeff({1}) + kLogBeta) < 1e-10);
  double zeta2 = M_PI * M_PI / 6;
  CHECK(std::abs(oracle::zeta2_quadrature() - zeta2) < 1e-10);
  CHECK(std::abs(lg.coeff({0, 1}) - (zeta2 - kLogBeta * kLogBeta / 2)) < 1e-8);
  // Killing the degree-one part leaves ζ(2).
  auto c = make_candidate(3, transcendental_lambda(), res.phi);
  auto fixed = series_log(twist(c, Complex(kLogBeta)).phi);
  CHECK(fixed.max_abs_degree(1) < 1e-10);
  CHECK(std::abs(fixed.coeff({0, 1}) - oracle::zeta2_quadrature()) < 1e-8);
}

TEST_CASE("half-turn and duality for Φ₀") {
  CHECK(transcendental_lambda() == Complex(0.0, M_PI));
  for (int m = 3; m <= 6; ++m) {
    auto h = half_turn_check(m, 4, 64, 1e-8);
    CHECK_MESSAGE(h.pass, "m = " << m << " residual " << h.residual);
    CHECK(h.duality_residual < 1e-8);
  }
}

TEST_CASE("mirror: Φ₀ also satisfies the equations at −iπ") {
  Phi0Options opt;
  opt.N = 4;
  auto res = phi0(4, opt);
  auto c = make_candidate(4, transcendental_lambda(), res.phi);
  CHECK(check_mirror(c, 1e-8));
  // A real λ fails.
  auto bad = make_candidate(4, Complex(1.0), res.phi);
  CHECK_FALSE(check_demi_tour(bad, 1e-8));
}

TEST_CASE("bridge to the KZ associator") {
  auto b = bridge_check_m3(4, 1e-10);
  CHECK(b.pass);
  CHECK(b.residual < 1e-10);
  auto kz = series_log(phi_kz3(3, 64));
  CHECK(std::abs(std::abs(kz.coeff({0, 1})) - oracle::zeta2_quadrature()) < 1e-8);
}

TEST_CASE("x-order too small raises a convergence error") {
  Phi0Options opt;
  opt.N = 3;
  opt.K = 6;
  CHECK_THROWS_AS(phi0(3, opt), ConvergenceError);
}
