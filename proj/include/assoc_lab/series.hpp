#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "assoc_lab/scalar.hpp"

namespace assoc_lab {

using Word = std::vector<int>;

/// A monomial w·T^tpow.  The word is packed as a base-g integer with the
/// first letter most significant, so concatenation is code(u)·g^|v| + code(v).
struct Key {
  int deg = 0;
  int tpow = 0;
  std::uint64_t code = 0;

  int length() const { return deg - tpow; }
  auto operator<=>(const Key&) const = default;
};

/// Dense index of every monomial of degree ≤ N on g letters.  Index order is
/// (degree, T-power, word lexicographic), which is also the canonical output
/// order of a series.
class Layout {
 public:
  static std::shared_ptr<const Layout> get(int g, int N);

  int letters() const { return g_; }
  int truncation() const { return N_; }
  std::size_t size() const { return keys_.size(); }
  std::size_t index(const Key& k) const { return offset_[k.deg][k.tpow] + k.code; }
  const Key& key(std::size_t i) const { return keys_[i]; }
  std::uint64_t power(int len) const { return pow_[len]; }
  std::size_t degree_begin(int d) const { return offset_[d][0]; }

  Key make_key(const Word& w, int tpow) const;
  Word word(const Key& k) const;

 private:
  Layout(int g, int N);
  int g_;
  int N_;
  std::vector<std::uint64_t> pow_;
  std::vector<std::vector<std::size_t>> offset_;
  std::vector<Key> keys_;
};

/// Truncated series in t_0..t_{m-2} and a commuting degree-one symbol T.
/// The last generator t_{m-1} never appears: it is expanded as -(t_0+...+t_{m-2}).
template <class K>
class Series {
 public:
  struct Term {
    Key key;
    K coeff;
  };

  Series() = default;
  Series(int m, int N);

  static Series one(int m, int N);
  static Series scalar(int m, int N, const K& c);
  /// t_r for any r modulo m.
  static Series gen(int m, int N, int r);
  static Series t_central(int m, int N);
  /// t_r + T/m, the generator of the full holonomy algebra.
  static Series full_gen(int m, int N, int r);
  static Series monomial(int m, int N, const Word& w, int tpow, const K& c);

  int m() const { return m_; }
  int truncation() const { return N_; }
  int letters() const { return m_ - 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Layout& layout() const { return *layout_; }
  std::shared_ptr<const Layout> layout_ptr() const { return layout_; }

  K coeff(const Word& w, int tpow = 0) const;
  K constant() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_tfree() const;
  std::size_t size() const { return terms_.size(); }
  int valuation() const;

  Series degree_part(int d) const;
  /// Keeps degrees ≤ n and sets the truncation to n, which may also raise it.
  Series with_truncation(int n) const;
  Series tfree_part() const;

  double max_abs() const;
  double max_abs_degree(int d) const;

  Series operator-() const;
  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  Series& operator*=(const K& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const K& c) { return a *= c; }
  friend Series operator*(const K& c, Series a) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b) { return a.mul(b); }

  Series mul(const Series& b) const;

  bool operator==(const Series& b) const;

  /// Builds from unordered (key, coeff) pairs, summing duplicates.
  static Series from_terms(int m, int N, std::vector<Term> terms);
  void check_compatible(const Series& b) const;

 private:
  void normalize();

  int m_ = 0;
  int N_ = 0;
  std::shared_ptr<const Layout> layout_;
  std::vector<Term> terms_;
};

template <class K>
Series<K> commutator(const Series<K>& a, const Series<K>& b);
template <class K>
Series<K> series_exp(const Series<K>& x);
template <class K>
Series<K> series_log(const Series<K>& g);
template <class K>
Series<K> series_inverse(const Series<K>& g);

/// Algebra morphism t_i ↦ images[i] (i < m-1), T ↦ image_t.
template <class K>
Series<K> substitute(const Series<K>& g, const std::vector<Series<K>>& images,
                     const Series<K>& image_t);

/// Largest coefficient magnitude of a-b.
template <class K>
double distance(const Series<K>& a, const Series<K>& b);

/// Exact equality in rational mode, max-coefficient distance ≤ tol otherwise.
template <class K>
bool approx_equal(const Series<K>& a, const Series<K>& b, double tol);

Series<Complex> to_complex(const Series<Rational>& x);
inline Series<Complex> to_complex(const Series<Complex>& x) { return x; }

/// Element of the completed tensor square, keyed by pairs of layout indices.
template <class K>
class Tensor {
 public:
  Tensor(int m, int N);
  static Tensor outer(const Series<K>& a, const Series<K>& b);

  int m() const { return m_; }
  int truncation() const { return N_; }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, K>& entries() const { return entries_; }
  void add(std::uint32_t i, std::uint32_t j, const K& c);
  K coeff(const Word& u, int tu, const Word& v, int tv) const;

  Tensor& operator+=(const Tensor& b);
  Tensor& operator-=(const Tensor& b);
  Tensor mul(const Tensor& b) const;
  double max_abs() const;
  void prune();

 private:
  int m_;
  int N_;
  std::shared_ptr<const Layout> layout_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, K> entries_;
};

template <class K>
Tensor<K> coproduct(const Series<K>& g);
template <class K>
bool is_grouplike(const Series<K>& g, double tol = 0.0);
template <class K>
bool is_primitive(const Series<K>& x, double tol = 0.0);

/// Lyndon words of length n on letters 0..g-1, in lexicographic order.
std::vector<Word> lyndon_words(int g, int n);
std::size_t witt_number(int g, int n);

/// Standard bracketing of a Lyndon word, computed in the algebra with m = g+1.
template <class K>
Series<K> lyndon_bracket(int m, int N, const Word& w);

template <class K>
struct LyndonElement {
  Word word;
  Series<K> bracket;
};

template <class K>
std::vector<LyndonElement<K>> lyndon_basis(int num_gens, int degree);

/// Coordinates of a homogeneous degree-n Lie element in the Lyndon basis.
/// Throws if the remainder after elimination exceeds tol.
template <class K>
std::vector<K> lie_coordinates(const Series<K>& x, int n, double tol = 0.0);

template <class K>
Series<K> from_lie_coordinates(int m, int N, int n, const std::vector<K>& coords);

std::string word_to_string(const Word& w);

}  // namespace assoc_lab
