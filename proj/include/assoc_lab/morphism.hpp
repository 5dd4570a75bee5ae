#pragma once

#include <string>
#include <utility>
#include <vector>

#include "assoc_lab/associator.hpp"

namespace assoc_lab {

/// Word in σ^{±1}, τ^{±1}, stored as merged runs (letter, exponent).
class BWord {
 public:
  enum Letter : char { Sigma = 's', Tau = 't' };

  BWord() = default;
  static BWord sigma(int e = 1) { return BWord().times(Sigma, e); }
  static BWord tau(int e = 1) { return BWord().times(Tau, e); }
  /// σ τ σ … with n letters, starting with the given letter.
  static BWord alternating(Letter first, int n, int e = 1);
  /// Parses letters s, t, S (σ⁻¹), T (τ⁻¹), optionally followed by ^k.
  static BWord parse(const std::string& text);

  BWord times(Letter l, int e) const;
  BWord operator*(const BWord& b) const;
  BWord inverse() const;
  BWord power(int k) const;
  /// g w g⁻¹.
  BWord conj(const BWord& g) const { return g * (*this) * g.inverse(); }

  const std::vector<std::pair<Letter, int>>& runs() const { return runs_; }
  int exponent_sum() const;
  std::string str() const;
  bool operator==(const BWord&) const = default;

 private:
  std::vector<std::pair<Letter, int>> runs_;
};

/// Images of σ and τ in kW ⋉ U𝔤.  With central = true these are
/// σ̄ = s·e^{λ𝕥₀} and τ̄ = Φ·ωs e^{λ𝕥₁}·Φ⁻¹, with 𝕥_i = t_i + T/m; with
/// central = false the T-free σ̃ = s e^{λt₀}, τ̃ = Φ ωs e^{λt₁} Φ⁻¹.
template <class K>
struct Morphism {
  int m = 3;
  K lambda{};
  AssociatorCandidate<K> assoc;
  bool central = true;
  FlatElem<K> sigma{3, 0}, tau{3, 0}, sigma_inv{3, 0}, tau_inv{3, 0};
};

/// Builds the morphism; if validate, rejects candidates failing the suite.
template <class K>
Morphism<K> build_morphism(const AssociatorCandidate<K>& c, bool central = true, bool validate = true,
                           double tol = 0.0);

template <class K>
FlatElem<K> eval_word(const Morphism<K>& M, const BWord& w);

template <class K>
FlatElem<K> central_exp(int m, int N, const K& coeff);

struct CheckLine {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

/// στσ… = τστ… (m letters) and the O-image formula for the parity of m.
template <class K>
std::vector<CheckLine> verify_artin(const Morphism<K>& M, double tol);

/// (στ)^m and (τσ)^m both evaluate to e^{2λT}.
template <class K>
CheckLine verify_center(const Morphism<K>& M, double tol);

/// Defining braid words of the pure braid generators.
BWord pure_u(int m, int r);
BWord pure_x(int m, int r);

/// Each table entry: defining word under σ̄, τ̄ against the closed form under
/// σ̃, τ̃ times the central factor e^{2kλT/m}.
template <class K>
std::vector<CheckLine> pure_braid_tables(const AssociatorCandidate<K>& c, double tol);

}  // namespace assoc_lab
