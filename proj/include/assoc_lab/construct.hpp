#pragma once

#include <string>
#include <vector>

#include "assoc_lab/associator.hpp"

namespace assoc_lab {

inline constexpr const char* kTieBreakRule = "rref-lyndon-lex-window-v1";

struct DegreeDiagnostics {
  int degree = 0;
  int window_start = 0;  // lowest degree re-solved together with this one
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  bool consistent = true;
};

struct DegreeStep {
  Series<Rational> correction;        // homogeneous Lie element of the given degree
  std::vector<Rational> coordinates;  // in the Lyndon basis, lexicographic order
  DegreeDiagnostics diagnostics;
};

class InconsistentSystem : public std::runtime_error {
 public:
  InconsistentSystem(const std::string& what, DegreeDiagnostics d) : std::runtime_error(what), diagnostics(d) {}
  DegreeDiagnostics diagnostics;
};

/// Finds the degree-n Lie correction φ_n so that phi_partial·exp(φ_n) satisfies
/// duality and demi-tour through degree n.  phi_partial must have truncation n
/// and already satisfy the equations below degree n.
DegreeStep degree_step(int m, const Rational& lambda, const Series<Rational>& phi_partial, int n,
                       bool with_duality = true);

struct RationalBuild {
  AssociatorCandidate<Rational> candidate;
  std::vector<DegreeStep> steps;
};

/// Solves degree by degree.  When a degree has no solution extending the
/// previous choices, the free choices of the preceding degrees k with 2k > n
/// are re-solved jointly with degree n; the system stays linear there.
/// Within a window, pivots follow (degree, Lyndon-lexicographic) column order
/// and free variables are set to zero.
RationalBuild build_rational(int m, const Rational& lambda, int N);

/// Lyndon coordinates of log Φ, one vector per degree 1..N.
template <class K>
std::vector<std::vector<K>> log_lyndon_coordinates(const Series<K>& phi, double tol = 0.0);

}  // namespace assoc_lab
