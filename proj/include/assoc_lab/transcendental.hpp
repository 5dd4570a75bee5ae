#pragma once

#include <vector>

#include "assoc_lab/fuchsian.hpp"

namespace assoc_lab {

/// Taylor coefficients of x ↦ cot(x + a) at 0, orders 0..K.
std::vector<double> cot_taylor(double a, int K);
/// Taylor coefficients of cot x − 1/x at 0, orders 0..K.
std::vector<double> cot_regular_taylor(int K);

enum class Side { Plus, Minus };

/// Local problem at θ_r on the chosen side: x = u − θ_r (Plus) or θ_r − u (Minus),
/// A = t_r, and C collects the regular part of Σ_q t_q cot(u − θ_q).
FuchsProblem<Complex> local_problem(int m, int r, Side side, int N, int K);

struct LocalSolution {
  FuchsProblem<Complex> problem;
  std::vector<Series<Complex>> p;
};
LocalSolution local_solution(int m, int r, Side side, int N, int K);

struct Phi0Options {
  int N = 4;
  int K = 64;
  double u_fraction = 0.5;  // evaluation point u = θ_r + fraction·θ
  double rho = 0.5;
  double tail_cutoff = 1e-12;
};

struct Phi0Result {
  Series<Complex> phi;
  double tail_plus = 0.0;
  double tail_minus = 0.0;
  std::vector<double> tail_by_degree;  // larger of the two sides
};

/// Φ_r = F_{r,+}(u)⁻¹ F_{r+1,−}(u) for u in (θ_r, θ_{r+1}); Φ₀ is r = 0.
Phi0Result phi_interval(int m, int r, const Phi0Options& opt);
inline Phi0Result phi0(int m, const Phi0Options& opt = {}) { return phi_interval(m, 0, opt); }

/// φ_KZ = G_+(½)⁻¹ G_−(½) for G' = (t₀/s + t₁/(s−1)) G, in the m = 3 algebra.
Series<Complex> phi_kz3(int N, int K);

struct BridgeResult {
  bool pass = false;
  double residual = 0.0;
};
/// Compares β^{−t₁} Φ₀⁻¹ β^{t₀} with φ_KZ, β = 1/sin(π/3).
BridgeResult bridge_check_m3(int N, double tol, int K = 64);

struct HalfTurnResult {
  bool pass = false;
  double residual = 0.0;
  double duality_residual = 0.0;
};
/// Demi-tour product of Φ₀ at λ = iπ, plus the 𝔍-duality residual.
HalfTurnResult half_turn_check(int m, int N, int K, double tol);

/// λ value at which Φ₀ satisfies the demi-tour equation.
Complex transcendental_lambda();

}  // namespace assoc_lab
