#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc_lab/dihedral.hpp"

namespace assoc_lab {

/// Φ together with its parameters.  For even m an optional second parameter μ
/// governs the odd-indexed exponentials; it defaults to λ.
template <class K>
struct AssociatorCandidate {
  int m = 3;
  K lambda{};
  std::optional<K> mu;
  Series<K> phi;

  int truncation() const { return phi.truncation(); }
  K mu_value() const { return mu ? *mu : lambda; }
};

template <class K>
AssociatorCandidate<K> make_candidate(int m, const K& lambda, const Series<K>& phi);

struct EquationReport {
  std::string equation;
  bool pass = true;
  std::optional<int> first_bad_degree;
  std::optional<double> residual_norm;
};

enum class Duality {
  Automatic,  // odd form for odd m, 𝔍 form for even m
  Odd,        // Φ⁻¹ = sω^{(m-1)/2} • Φ
  J,          // 𝔍(Φ) = Φ⁻¹
};

template <class K>
Series<K> make_P(const AssociatorCandidate<K>& c);
template <class K>
Series<K> make_xi(const AssociatorCandidate<K>& c);

/// Residual series of each equation; zero exactly when it holds.
template <class K>
Series<K> duality_residual(const AssociatorCandidate<K>& c, Duality kind = Duality::Automatic);
template <class K>
Series<K> demi_tour_product(const AssociatorCandidate<K>& c);
template <class K>
Series<K> demi_tour_residual(const AssociatorCandidate<K>& c);

/// Summarises a residual: lowest degree above tol and the largest coefficient.
template <class K>
EquationReport residual_report(const std::string& name, const Series<K>& residual, double tol);

template <class K>
EquationReport check_grouplike_report(const Series<K>& phi, double tol);
template <class K>
EquationReport check_duality_report(const AssociatorCandidate<K>& c, double tol, Duality kind = Duality::Automatic);
template <class K>
EquationReport check_demi_tour_report(const AssociatorCandidate<K>& c, double tol);
template <class K>
EquationReport check_mirror_report(const AssociatorCandidate<K>& c, double tol, bool with_duality = true);

template <class K>
bool check_duality(const AssociatorCandidate<K>& c, double tol, Duality kind = Duality::Automatic);
template <class K>
bool check_demi_tour(const AssociatorCandidate<K>& c, double tol);
template <class K>
bool check_mirror(const AssociatorCandidate<K>& c, double tol, bool with_duality = true);

/// Grouplike, duality (unless disabled) and demi-tour together.
template <class K>
std::vector<EquationReport> check_suite(const AssociatorCandidate<K>& c, double tol, bool with_duality = true);
bool all_pass(const std::vector<EquationReport>& reports);

/// exp(-αt₀) Φ exp(αt₁).
template <class K>
AssociatorCandidate<K> twist(const AssociatorCandidate<K>& c, const K& alpha);
/// Φ exp(αt₁), the extra freedom available for even m.
template <class K>
AssociatorCandidate<K> right_twist(const AssociatorCandidate<K>& c, const K& alpha);

/// t_r ↦ μ t_r on every generator; λ ↦ μλ.
template <class K>
AssociatorCandidate<K> scale(const AssociatorCandidate<K>& c, const K& factor);
/// Even m only: t_r ↦ α t_r (r even), β t_r (r odd) on the retained
/// generators t_0..t_{m-2}; λ ↦ αλ, μ ↦ βμ.
template <class K>
AssociatorCandidate<K> scale_pair(const AssociatorCandidate<K>& c, const K& alpha, const K& beta);

}  // namespace assoc_lab
