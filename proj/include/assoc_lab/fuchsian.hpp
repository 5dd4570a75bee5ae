#pragma once

#include <stdexcept>
#include <vector>

#include "assoc_lab/series.hpp"

namespace assoc_lab {

/// G'(x) = (A/x + C(x)) G(x) with C(x) = Σ_k c_k x^k.
template <class K>
struct FuchsProblem {
  Series<K> A;
  std::vector<Series<K>> c;  // c_0 .. c_K
  int x_order() const { return static_cast<int>(c.size()) - 1; }
};

/// Coefficients p_0..p_K of the analytic factor P in G = P(x)·x^A.
/// They satisfy n p_n + [p_n, A] = Σ_{k+s=n-1} c_k p_s.
template <class K>
std::vector<Series<K>> solve_P(const FuchsProblem<K>& problem);

/// Largest coefficient of x P' + [P, A] - x C(x) P through x-order K, built
/// with truncated polynomial arithmetic in x rather than the recursion.
template <class K>
double fuchs_residual(const FuchsProblem<K>& problem, const std::vector<Series<K>>& p);

enum class LogBranch {
  Real,       // log|x|
  Principal,  // Log x, so Log(-x) = log x + iπ for x > 0
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  double radius = 0.0;  // distance to the nearest other singularity; 0 disables the check
  double rho = 0.5;
  double tail_cutoff = 1e-12;
};

struct EvalResult {
  Series<Complex> value;
  double tail = 0.0;  // relative size of the last x-term
  std::vector<double> tail_by_degree;
};

/// Σ p_n x^n · exp(A·log x) on the chosen branch.
EvalResult eval_G(const std::vector<Series<Complex>>& p, const Series<Complex>& A, Complex x,
                  LogBranch branch = LogBranch::Principal, const EvalOptions& opt = {});

}  // namespace assoc_lab
