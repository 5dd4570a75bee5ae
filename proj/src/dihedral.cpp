#include "assoc_lab/dihedral.hpp"

#include "assoc_lab/linalg.hpp"

namespace assoc_lab {

static int mod(int a, int m) { return ((a % m) + m) % m; }

WElem w_make(int m, int s, int w) { return {mod(s, 2), mod(w, m)}; }

WElem w_mul(int m, WElem g, WElem h) {
  int k = h.s ? -g.w : g.w;
  return {g.s ^ h.s, mod(k + h.w, m)};
}

WElem w_inv(int m, WElem g) {
  if (g.s) return g;
  return {0, mod(-g.w, m)};
}

WElem w_pow(int m, WElem g, int k) {
  WElem base = k < 0 ? w_inv(m, g) : g;
  WElem r = w_identity();
  for (int i = 0; i < std::abs(k); ++i) r = w_mul(m, r, base);
  return r;
}

int w_act_index(int m, WElem g, int r) {
  int x = r + 2 * g.w;
  return mod(g.s ? -x : x, m);
}

WElem j_act_w(int m, WElem g) {
  if (g.s) return w_make(m, 1, -1 - g.w);
  return w_make(m, 0, -g.w);
}

template <class K>
Series<K> w_act_series(WElem g, const Series<K>& x) {
  if (g == w_identity()) return x;
  int m = x.m(), N = x.truncation();
  std::vector<Series<K>> images;
  for (int i = 0; i < m - 1; ++i) images.push_back(Series<K>::gen(m, N, w_act_index(m, g, i)));
  return substitute(x, images, Series<K>::t_central(m, N));
}

template <class K>
Series<K> j_act_series(const Series<K>& x) {
  int m = x.m(), N = x.truncation();
  std::vector<Series<K>> images;
  for (int i = 0; i < m - 1; ++i) images.push_back(Series<K>::gen(m, N, 1 - i));
  return substitute(x, images, Series<K>::t_central(m, N));
}

// ---------------------------------------------------------------- FlatElem

template <class K>
FlatElem<K> FlatElem<K>::identity(int m, int N) {
  return single(w_identity(), Series<K>::one(m, N));
}

template <class K>
FlatElem<K> FlatElem<K>::single(WElem g, const Series<K>& a) {
  FlatElem f(a.m(), a.truncation());
  f.add(g, a);
  return f;
}

template <class K>
Series<K> FlatElem<K>::part(WElem g) const {
  auto it = parts_.find(g);
  return it == parts_.end() ? Series<K>(m_, N_) : it->second;
}

template <class K>
void FlatElem<K>::add(WElem g, const Series<K>& a) {
  if (a.m() != m_ || a.truncation() != N_) throw std::invalid_argument("flat element mismatch");
  auto it = parts_.find(g);
  if (it == parts_.end()) {
    if (!a.is_zero()) parts_.emplace(g, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) parts_.erase(it);
}

template <class K>
FlatElem<K> FlatElem<K>::operator*(const FlatElem& b) const {
  if (m_ != b.m_ || N_ != b.N_) throw std::invalid_argument("flat element mismatch");
  FlatElem out(m_, N_);
  for (const auto& [g, a] : parts_)
    for (const auto& [h, c] : b.parts_) out.add(w_mul(m_, g, h), w_act_series(w_inv(m_, h), a) * c);
  return out;
}

template <class K>
FlatElem<K>& FlatElem<K>::operator+=(const FlatElem& b) {
  for (const auto& [g, a] : b.parts_) add(g, a);
  return *this;
}

template <class K>
FlatElem<K> FlatElem<K>::operator-(const FlatElem& b) const {
  FlatElem out = *this;
  for (const auto& [g, a] : b.parts_) out.add(g, -a);
  return out;
}

template <class K>
FlatElem<K> FlatElem<K>::scaled(const K& c) const {
  FlatElem out(m_, N_);
  for (const auto& [g, a] : parts_) out.add(g, a * c);
  return out;
}

template <class K>
double FlatElem<K>::max_abs() const {
  double r = 0.0;
  for (const auto& [g, a] : parts_) r = std::max(r, a.max_abs());
  return r;
}

template <class K>
FlatElem<K> flat_inv(const FlatElem<K>& a) {
  int m = a.m(), N = a.truncation();
  if (a.single_support()) {
    const auto& [g, x] = *a.parts().begin();
    return FlatElem<K>::single(w_inv(m, g), w_act_series(g, series_inverse(x)));
  }
  // Invert the group-algebra part by solving (a₀ b₀) = 1 over the 2m basis elements.
  std::vector<WElem> elems;
  for (int s = 0; s < 2; ++s)
    for (int w = 0; w < m; ++w) elems.push_back({s, w});
  auto idx = [m](WElem g) { return g.s * m + g.w; };
  const int n = 2 * m;
  Matrix<K> M(n, std::vector<K>(n, Field<K>::zero()));
  for (const auto& [g, x] : a.parts()) {
    K c = x.constant();
    if (Field<K>::is_zero(c)) continue;
    for (const WElem& h : elems) M[idx(w_mul(m, g, h))][idx(h)] += c;
  }
  std::vector<K> rhs(n, Field<K>::zero());
  rhs[idx(w_identity())] = Field<K>::one();
  auto sol = solve_rref(M, rhs);
  if (!sol.consistent || sol.rank() < n) throw std::domain_error("degree-zero part is not invertible");
  FlatElem<K> b0(m, N);
  for (const WElem& h : elems)
    if (!Field<K>::is_zero(sol.solution[idx(h)])) b0.add(h, Series<K>::scalar(m, N, sol.solution[idx(h)]));
  FlatElem<K> y = FlatElem<K>::identity(m, N) - a * b0;
  FlatElem<K> acc = FlatElem<K>::identity(m, N);
  for (int k = 0; k < N; ++k) {
    acc = y * acc;
    acc += FlatElem<K>::identity(m, N);
  }
  return b0 * acc;
}

template <class K>
double distance(const FlatElem<K>& a, const FlatElem<K>& b) {
  return (a - b).max_abs();
}

template <class K>
bool approx_equal(const FlatElem<K>& a, const FlatElem<K>& b, double tol) {
  auto d = a - b;
  if constexpr (Field<K>::exact) {
    (void)tol;
    return d.parts().empty();
  } else {
    return d.max_abs() <= tol;
  }
}

#define ASSOC_LAB_INSTANTIATE(K)                                   \
  template Series<K> w_act_series(WElem, const Series<K>&);        \
  template Series<K> j_act_series(const Series<K>&);               \
  template class FlatElem<K>;                                      \
  template FlatElem<K> flat_inv(const FlatElem<K>&);               \
  template double distance(const FlatElem<K>&, const FlatElem<K>&); \
  template bool approx_equal(const FlatElem<K>&, const FlatElem<K>&, double);

ASSOC_LAB_INSTANTIATE(Rational)
ASSOC_LAB_INSTANTIATE(Complex)

}  // namespace assoc_lab
