#pragma once

#include <map>
#include <vector>

#include "assoc_lab/series.hpp"

namespace assoc_lab {

/// The element s^s ω^w of the dihedral group of order 2m.
struct WElem {
  int s = 0;
  int w = 0;
  auto operator<=>(const WElem&) const = default;
};

WElem w_make(int m, int s, int w);
WElem w_mul(int m, WElem g, WElem h);
WElem w_inv(int m, WElem g);
WElem w_pow(int m, WElem g, int k);
inline WElem w_identity() { return {0, 0}; }
inline WElem w_s() { return {1, 0}; }
inline WElem w_omega(int m, int k = 1) { return w_make(m, 0, k); }
/// ωs written in normal form.
inline WElem w_omega_s(int m) { return w_make(m, 1, -1); }

/// Index r of t_r moved by g: s sends r to -r, ω sends r to r+2.
int w_act_index(int m, WElem g, int r);

template <class K>
Series<K> w_act_series(WElem g, const Series<K>& x);

/// The involution t_r ↦ t_{1-r}, T ↦ T.
template <class K>
Series<K> j_act_series(const Series<K>& x);
/// The matching automorphism of W: s ↦ ωs, ω ↦ ω^{-1}.
WElem j_act_w(int m, WElem g);

/// Finitely supported sum of terms g·a with g in W and a a series.
/// Multiplication follows (g·a)(h·b) = gh·((h⁻¹•a) b).
template <class K>
class FlatElem {
 public:
  FlatElem(int m, int N) : m_(m), N_(N) {}
  static FlatElem identity(int m, int N);
  static FlatElem single(WElem g, const Series<K>& a);

  int m() const { return m_; }
  int truncation() const { return N_; }
  const std::map<WElem, Series<K>>& parts() const { return parts_; }
  Series<K> part(WElem g) const;
  void add(WElem g, const Series<K>& a);
  bool single_support() const { return parts_.size() == 1; }

  FlatElem operator*(const FlatElem& b) const;
  FlatElem& operator+=(const FlatElem& b);
  FlatElem operator-(const FlatElem& b) const;
  FlatElem scaled(const K& c) const;

  double max_abs() const;

 private:
  int m_;
  int N_;
  std::map<WElem, Series<K>> parts_;
};

template <class K>
FlatElem<K> flat_inv(const FlatElem<K>& a);

template <class K>
bool approx_equal(const FlatElem<K>& a, const FlatElem<K>& b, double tol);

template <class K>
double distance(const FlatElem<K>& a, const FlatElem<K>& b);

}  // namespace assoc_lab
