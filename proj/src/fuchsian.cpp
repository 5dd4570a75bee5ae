#include "assoc_lab/fuchsian.hpp"

#include <cmath>
#include <sstream>

namespace assoc_lab {

template <class K>
std::vector<Series<K>> solve_P(const FuchsProblem<K>& problem) {
  const auto& A = problem.A;
  int m = A.m(), N = A.truncation();
  for (const auto& ck : problem.c) {
    ck.check_compatible(A);
    if (!Field<K>::is_zero(ck.constant())) throw std::invalid_argument("C must have positive valuation");
  }
  if (!Field<K>::is_zero(A.constant())) throw std::invalid_argument("A must have positive valuation");
  int Kx = problem.x_order();
  std::vector<Series<K>> p;
  p.push_back(Series<K>::one(m, N));
  for (int n = 1; n <= Kx; ++n) {
    Series<K> rhs(m, N);
    for (int k = 0; k <= n - 1; ++k) rhs += problem.c[k] * p[n - 1 - k];
    // (n + D)⁻¹ with D(q) = [q, A]; D raises degree, so the Neumann sum stops.
    K inv_n = Field<K>::from_ratio(1, n);
    Series<K> term = rhs * inv_n;
    Series<K> acc = term;
    for (int j = 0; j < N && !term.is_zero(); ++j) {
      term = commutator(term, A) * K(-inv_n);
      acc += term;
    }
    p.push_back(std::move(acc));
  }
  return p;
}

template <class K>
double fuchs_residual(const FuchsProblem<K>& problem, const std::vector<Series<K>>& p) {
  const auto& A = problem.A;
  int m = A.m(), N = A.truncation();
  int Kx = problem.x_order();
  if (static_cast<int>(p.size()) != Kx + 1) throw std::invalid_argument("wrong number of P coefficients");
  using Poly = std::vector<Series<K>>;
  auto zero_poly = [&] { return Poly(Kx + 1, Series<K>(m, N)); };
  auto poly_mul = [&](const Poly& a, const Poly& b) {
    Poly out = zero_poly();
    for (int i = 0; i <= Kx; ++i)
      for (int j = 0; i + j <= Kx; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  Poly xC = zero_poly();
  for (int k = 0; k + 1 <= Kx; ++k) xC[k + 1] = problem.c[k];
  Poly xdP = zero_poly();
  for (int n = 0; n <= Kx; ++n) xdP[n] = p[n] * Field<K>::from_int(n);
  Poly Acst = zero_poly();
  Acst[0] = A;
  auto PA = poly_mul(p, Acst), AP = poly_mul(Acst, p), CP = poly_mul(xC, p);
  double worst = 0.0;
  for (int n = 0; n <= Kx; ++n) {
    auto r = xdP[n] + PA[n] - AP[n] - CP[n];
    worst = std::max(worst, r.max_abs());
  }
  return worst;
}

EvalResult eval_G(const std::vector<Series<Complex>>& p, const Series<Complex>& A, Complex x, LogBranch branch,
                  const EvalOptions& opt) {
  if (opt.radius > 0.0 && std::abs(x) > opt.rho * opt.radius * (1 + 1e-12)) {
    std::ostringstream os;
    os << "evaluation point |x| = " << std::abs(x) << " exceeds " << opt.rho << " x radius " << opt.radius;
    throw ConvergenceError(os.str());
  }
  int m = A.m(), N = A.truncation();
  Series<Complex> sum(m, N);
  Complex xn = 1.0;
  double last = 0.0;
  EvalResult out;
  for (std::size_t n = 0; n < p.size(); ++n) {
    auto term = p[n] * xn;
    if (n + 1 == p.size()) {
      last = term.max_abs();
      for (int d = 0; d <= N; ++d) out.tail_by_degree.push_back(term.max_abs_degree(d));
    }
    sum += term;
    xn *= x;
  }
  out.tail = last / std::max(1.0, sum.max_abs());
  if (opt.tail_cutoff > 0.0 && out.tail > opt.tail_cutoff) {
    std::ostringstream os;
    os << "series tail " << out.tail << " above cutoff " << opt.tail_cutoff << "; raise the x-order";
    throw ConvergenceError(os.str());
  }
  Complex lg = branch == LogBranch::Principal ? std::log(x) : Complex(std::log(std::abs(x)), 0.0);
  out.value = sum * series_exp(A * lg);
  return out;
}

template std::vector<Series<Rational>> solve_P(const FuchsProblem<Rational>&);
template std::vector<Series<Complex>> solve_P(const FuchsProblem<Complex>&);
template double fuchs_residual(const FuchsProblem<Rational>&, const std::vector<Series<Rational>>&);
template double fuchs_residual(const FuchsProblem<Complex>&, const std::vector<Series<Complex>>&);

}  // namespace assoc_lab
