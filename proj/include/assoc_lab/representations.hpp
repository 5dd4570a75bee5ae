#pragma once

#include <vector>

#include "assoc_lab/linalg.hpp"
#include "assoc_lab/morphism.hpp"

namespace assoc_lab {

/// Dense square complex matrix.
struct CMat {
  int n = 0;
  std::vector<Complex> a;

  CMat() = default;
  explicit CMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
  CMat(int dim, std::initializer_list<Complex> entries);
  static CMat identity(int dim);

  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  CMat operator*(const CMat& b) const;
  CMat operator+(const CMat& b) const;
  CMat operator-(const CMat& b) const;
  CMat operator*(Complex c) const;
  CMat& operator+=(const CMat& b);
  CMat pow(int k) const;
  CMat inverse() const;
  Complex trace() const;
  double max_abs() const;
};

/// Eigenvalues of a 2×2 matrix.
std::vector<Complex> eigenvalues2(const CMat& M);

/// A representation of W fixed by the images of s and ω.
struct MatrixRep {
  int m = 3;
  int dim = 2;
  CMat s, omega;

  CMat image(WElem g) const;
  /// Image of 𝕥_r, taken to be the reflection ω^r s attached to it.
  CMat t_image(int r) const;
};

MatrixRep reflection_rep(int m);

struct HeckePair {
  CMat sigma, tau;
};
/// 2-dimensional Hecke representation with d_j = 2cos(jπ/m).
HeckePair hecke_rep(int m, int j, Complex v);

/// Polynomial in h with matrix coefficients, truncated at order N_h.
struct HSeriesMatrix {
  int dim = 2;
  int order = 0;
  std::vector<CMat> c;  // c[k] multiplies h^k

  HSeriesMatrix() = default;
  HSeriesMatrix(int d, int N_h);
  static HSeriesMatrix constant(const CMat& M, int N_h);
  HSeriesMatrix operator*(const HSeriesMatrix& b) const;
  HSeriesMatrix operator+(const HSeriesMatrix& b) const;
  HSeriesMatrix operator-(const HSeriesMatrix& b) const;
  double max_abs() const;
};

using HSeries = std::vector<Complex>;  // scalar power series in h

/// e^{z h} truncated at order N_h.
HSeries h_exp(Complex z, int N_h);
HSeriesMatrix scale(const HSeriesMatrix& M, const HSeries& f);

/// Image of a FlatElem: g·a ↦ R(g)·a(𝕥_r ↦ hR(𝕥_r), T ↦ hΣR(𝕥_r)).
HSeriesMatrix flat_image(const MatrixRep& R, const FlatElem<Complex>& x, int N_h);

struct MonodromyRep {
  HSeriesMatrix sigma, tau;
};
MonodromyRep monodromy_rep(const Morphism<Complex>& M, const MatrixRep& R, int N_h);

/// Both eigenvalue series of a 2×2 HSeriesMatrix, lifted from distinct h⁰ roots.
std::vector<HSeries> eigen_series(const HSeriesMatrix& M);

/// Largest coefficient of (M′+1)(M′−v²) with M′ = v·M and v = e^{λh}.
double hecke_factor_residual(const HSeriesMatrix& M, Complex lambda);

struct AbaResult {
  std::vector<Complex> spectrum;  // sorted by modulus
  bool unitarizable = false;
  bool spectral_bound_ok = false;  // nonzero eigenvalue lies in (0, 1]
};
/// a, b: projectors onto the (−1)-eigenspaces of ρ_j(σ), ρ_j(τ) along the
/// other eigenspace, at Hecke parameter u = e^{iα} = v².
AbaResult aba_obstruction(int m, int j, double alpha);

}  // namespace assoc_lab
