#include "assoc_lab/transcendental.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "assoc_lab/associator.hpp"

namespace assoc_lab {

using C = Complex;
using S = Series<C>;

std::vector<double> cot_taylor(double a, int K) {
  double sa = std::sin(a);
  if (std::abs(sa) < 1e-12) throw std::domain_error("cot is singular at multiples of pi");
  std::vector<double> y(K + 1);
  y[0] = std::cos(a) / sa;
  // cot' = -(1 + cot²), read coefficient-wise.
  for (int k = 0; k < K; ++k) {
    double s = (k == 0) ? 1.0 : 0.0;
    for (int i = 0; i <= k; ++i) s += y[i] * y[k - i];
    y[k + 1] = -s / (k + 1);
  }
  return y;
}

std::vector<double> cot_regular_taylor(int K) {
  // f = cot x − 1/x satisfies f' + 2f/x = −1 − f².
  std::vector<double> b(K + 1, 0.0);
  for (int j = 0; j + 1 <= K; ++j) {
    double s = (j == 0) ? 1.0 : 0.0;
    for (int i = 0; i <= j; ++i) s += b[i] * b[j - i];
    b[j + 1] = -s / (j + 3);
  }
  return b;
}

FuchsProblem<C> local_problem(int m, int r, Side side, int N, int K) {
  const double theta = std::numbers::pi / m;
  FuchsProblem<C> prob;
  prob.A = S::gen(m, N, r);
  prob.c.assign(K + 1, S(m, N));
  auto reg = cot_regular_taylor(K);
  for (int k = 0; k <= K; ++k) prob.c[k] += prob.A * C(reg[k]);
  for (int q = 0; q < m; ++q) {
    if (q == ((r % m) + m) % m) continue;
    double shift = (side == Side::Plus ? r - q : q - r) * theta;
    auto coeffs = cot_taylor(shift, K);
    auto tq = S::gen(m, N, q);
    for (int k = 0; k <= K; ++k) prob.c[k] += tq * C(coeffs[k]);
  }
  return prob;
}

LocalSolution local_solution(int m, int r, Side side, int N, int K) {
  LocalSolution s;
  s.problem = local_problem(m, r, side, N, K);
  s.p = solve_P(s.problem);
  return s;
}

Phi0Result phi_interval(int m, int r, const Phi0Options& opt) {
  const double theta = std::numbers::pi / m;
  if (!(opt.u_fraction > 0.0 && opt.u_fraction < 1.0)) throw std::invalid_argument("evaluation point must lie inside the interval");
  auto plus = local_solution(m, r, Side::Plus, opt.N, opt.K);
  auto minus = local_solution(m, r + 1, Side::Minus, opt.N, opt.K);
  EvalOptions eo;
  eo.radius = theta;
  eo.rho = opt.rho;
  eo.tail_cutoff = opt.tail_cutoff;
  auto fp = eval_G(plus.p, plus.problem.A, C(opt.u_fraction * theta), LogBranch::Real, eo);
  auto fm = eval_G(minus.p, minus.problem.A, C((1.0 - opt.u_fraction) * theta), LogBranch::Real, eo);
  Phi0Result out;
  out.phi = series_inverse(fp.value) * fm.value;
  out.tail_plus = fp.tail;
  out.tail_minus = fm.tail;
  for (std::size_t d = 0; d < fp.tail_by_degree.size(); ++d)
    out.tail_by_degree.push_back(std::max(fp.tail_by_degree[d], fm.tail_by_degree[d]));
  return out;
}

S phi_kz3(int N, int K) {
  const int m = 3;
  FuchsProblem<C> near0, near1;
  near0.A = S::gen(m, N, 0);
  near1.A = S::gen(m, N, 1);
  near0.c.assign(K + 1, -S::gen(m, N, 1));
  near1.c.assign(K + 1, -S::gen(m, N, 0));
  EvalOptions eo;
  eo.radius = 1.0;
  auto gm = eval_G(solve_P(near0), near0.A, C(0.5), LogBranch::Real, eo);
  auto gp = eval_G(solve_P(near1), near1.A, C(0.5), LogBranch::Real, eo);
  return series_inverse(gp.value) * gm.value;
}

BridgeResult bridge_check_m3(int N, double tol, int K) {
  Phi0Options opt;
  opt.N = N;
  opt.K = K;
  auto phi = phi0(3, opt).phi;
  double log_beta = -std::log(std::sin(std::numbers::pi / 3));
  auto lhs = series_exp(S::gen(3, N, 1) * C(-log_beta)) * series_inverse(phi) * series_exp(S::gen(3, N, 0) * C(log_beta));
  BridgeResult out;
  out.residual = distance(lhs, phi_kz3(N, K));
  out.pass = out.residual < tol;
  return out;
}

Complex transcendental_lambda() { return C(0.0, std::numbers::pi); }

HalfTurnResult half_turn_check(int m, int N, int K, double tol) {
  Phi0Options opt;
  opt.N = N;
  opt.K = K;
  auto phi = phi0(m, opt).phi;
  auto c = make_candidate(m, transcendental_lambda(), phi);
  HalfTurnResult out;
  out.residual = demi_tour_residual(c).max_abs();
  out.duality_residual = duality_residual(c, Duality::J).max_abs();
  out.pass = out.residual < tol;
  return out;
}

}  // namespace assoc_lab
