#include "assoc_lab/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace assoc_lab {

CMat::CMat(int dim, std::initializer_list<Complex> entries) : CMat(dim) {
  if (entries.size() != a.size()) throw std::invalid_argument("wrong number of matrix entries");
  std::copy(entries.begin(), entries.end(), a.begin());
}

CMat CMat::identity(int dim) {
  CMat I(dim);
  for (int i = 0; i < dim; ++i) I(i, i) = 1.0;
  return I;
}

CMat CMat::operator*(const CMat& b) const {
  if (n != b.n) throw std::invalid_argument("matrix dimension mismatch");
  CMat out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Complex x = (*this)(i, k);
      if (x == Complex(0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

CMat CMat::operator+(const CMat& b) const {
  CMat out = *this;
  return out += b;
}

CMat& CMat::operator+=(const CMat& b) {
  if (n != b.n) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.a[i];
  return *this;
}

CMat CMat::operator-(const CMat& b) const { return *this + b * Complex(-1.0); }

CMat CMat::operator*(Complex c) const {
  CMat out = *this;
  for (auto& x : out.a) x *= c;
  return out;
}

CMat CMat::pow(int k) const {
  CMat base = k < 0 ? inverse() : *this;
  CMat out = identity(n);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

CMat CMat::inverse() const {
  Matrix<Complex> A(n, std::vector<Complex>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = (*this)(i, j);
    A[i][n + i] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(A[i][c]) > std::abs(A[p][c])) p = i;
    if (std::abs(A[p][c]) < 1e-300) throw std::domain_error("singular matrix");
    std::swap(A[p], A[c]);
    Complex inv = 1.0 / A[c][c];
    for (auto& x : A[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      Complex f = A[i][c];
      for (int j = 0; j < 2 * n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  CMat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = A[i][n + j];
  return out;
}

Complex CMat::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double CMat::max_abs() const {
  double w = 0.0;
  for (const auto& x : a) w = std::max(w, std::abs(x));
  return w;
}

std::vector<Complex> eigenvalues2(const CMat& M) {
  if (M.n != 2) throw std::invalid_argument("eigenvalues2 needs a 2x2 matrix");
  Complex tr = M.trace();
  Complex det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  std::vector<Complex> ev{(tr + disc) / 2.0, (tr - disc) / 2.0};
  std::sort(ev.begin(), ev.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  return ev;
}

CMat MatrixRep::image(WElem g) const {
  g = w_make(m, g.s, g.w);
  CMat out = s.pow(g.s) * omega.pow(g.w);
  return out;
}

CMat MatrixRep::t_image(int r) const { return omega.pow(((r % m) + m) % m) * s; }

MatrixRep reflection_rep(int m) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  double c = 2.0 * std::cos(std::numbers::pi / m);
  MatrixRep R;
  R.m = m;
  R.dim = 2;
  R.s = CMat(2, {-1.0, 0.0, -c, 1.0});
  CMat s2(2, {1.0, -c, 0.0, -1.0});
  R.omega = s2 * R.s;
  return R;
}

HeckePair hecke_rep(int m, int j, Complex v) {
  if (std::abs(v) == 0.0) throw std::invalid_argument("Hecke parameter v must be nonzero");
  if (m < 3 || j < 1) throw std::invalid_argument("need m >= 3 and j >= 1");
  Complex d = 2.0 * std::cos(j * std::numbers::pi / m);
  HeckePair H;
  H.sigma = CMat(2, {-1.0, 0.0, v * d, v * v});
  H.tau = CMat(2, {v * v, v * d, 0.0, -1.0});
  return H;
}

HSeriesMatrix::HSeriesMatrix(int d, int N_h) : dim(d), order(N_h), c(N_h + 1, CMat(d)) {}

HSeriesMatrix HSeriesMatrix::constant(const CMat& M, int N_h) {
  HSeriesMatrix out(M.n, N_h);
  out.c[0] = M;
  return out;
}

HSeriesMatrix HSeriesMatrix::operator*(const HSeriesMatrix& b) const {
  if (dim != b.dim || order != b.order) throw std::invalid_argument("h-series matrices are incompatible");
  HSeriesMatrix out(dim, order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) out.c[i + j] += c[i] * b.c[j];
  return out;
}

HSeriesMatrix HSeriesMatrix::operator+(const HSeriesMatrix& b) const {
  if (dim != b.dim || order != b.order) throw std::invalid_argument("h-series matrices are incompatible");
  HSeriesMatrix out = *this;
  for (int i = 0; i <= order; ++i) out.c[i] += b.c[i];
  return out;
}

HSeriesMatrix HSeriesMatrix::operator-(const HSeriesMatrix& b) const {
  HSeriesMatrix neg = b;
  for (auto& x : neg.c) x = x * Complex(-1.0);
  return *this + neg;
}

double HSeriesMatrix::max_abs() const {
  double w = 0.0;
  for (const auto& x : c) w = std::max(w, x.max_abs());
  return w;
}

HSeries h_exp(Complex z, int N_h) {
  HSeries e(N_h + 1);
  Complex term = 1.0;
  for (int k = 0; k <= N_h; ++k) {
    e[k] = term;
    term *= z / double(k + 1);
  }
  return e;
}

HSeriesMatrix scale(const HSeriesMatrix& M, const HSeries& f) {
  HSeriesMatrix out(M.dim, M.order);
  for (int i = 0; i <= M.order; ++i)
    for (int j = 0; i + j <= M.order && j < static_cast<int>(f.size()); ++j) out.c[i + j] += M.c[i] * f[j];
  return out;
}

HSeriesMatrix flat_image(const MatrixRep& R, const FlatElem<Complex>& x, int N_h) {
  int m = x.m();
  if (N_h > x.truncation()) throw std::invalid_argument("h-order exceeds the associator truncation");
  CMat S(R.dim);
  for (int r = 0; r < m; ++r) S += R.t_image(r);
  std::vector<CMat> X;
  for (int i = 0; i + 1 < m; ++i) X.push_back(R.t_image(i) - S * Complex(1.0 / m));
  HSeriesMatrix out(R.dim, N_h);
  for (const auto& [g, a] : x.parts()) {
    HSeriesMatrix img(R.dim, N_h);
    const auto& L = a.layout();
    for (const auto& term : a.terms()) {
      if (term.key.deg > N_h) continue;
      CMat P = CMat::identity(R.dim);
      for (int letter : L.word(term.key)) P = P * X[letter];
      P = P * S.pow(term.key.tpow);
      img.c[term.key.deg] += P * term.coeff;
    }
    out = out + HSeriesMatrix::constant(R.image(g), N_h) * img;
  }
  return out;
}

MonodromyRep monodromy_rep(const Morphism<Complex>& M, const MatrixRep& R, int N_h) {
  if (R.m != M.m) throw std::invalid_argument("representation and morphism disagree on m");
  return {flat_image(R, M.sigma, N_h), flat_image(R, M.tau, N_h)};
}

namespace {

HSeries hmul(const HSeries& a, const HSeries& b, int N_h) {
  HSeries out(N_h + 1, 0.0);
  for (int i = 0; i <= N_h; ++i)
    for (int j = 0; i + j <= N_h; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<HSeries> eigen_series(const HSeriesMatrix& M) {
  if (M.dim != 2) throw std::invalid_argument("eigen_series needs 2x2 matrices");
  int Nh = M.order;
  HSeries tr(Nh + 1), det;
  std::vector<HSeries> e(4, HSeries(Nh + 1));
  for (int k = 0; k <= Nh; ++k) {
    tr[k] = M.c[k].trace();
    for (int idx = 0; idx < 4; ++idx) e[idx][k] = M.c[k].a[idx];
  }
  det = hmul(e[0], e[3], Nh);
  auto off = hmul(e[1], e[2], Nh);
  for (int k = 0; k <= Nh; ++k) det[k] -= off[k];
  auto roots0 = eigenvalues2(M.c[0]);
  if (std::abs(roots0[0] - roots0[1]) < 1e-9) throw std::domain_error("h^0 eigenvalues coincide; lift is not unique");
  std::vector<HSeries> out;
  for (Complex r0 : roots0) {
    HSeries r(Nh + 1, 0.0);
    r[0] = r0;
    Complex dp = 2.0 * r0 - tr[0];
    for (int n = 1; n <= Nh; ++n) {
      auto r2 = hmul(r, r, Nh);
      auto tr_r = hmul(tr, r, Nh);
      Complex pn = r2[n] - tr_r[n] + det[n];
      r[n] = -pn / dp;
    }
    out.push_back(r);
  }
  return out;
}

double hecke_factor_residual(const HSeriesMatrix& M, Complex lambda) {
  int Nh = M.order;
  auto Mp = scale(M, h_exp(lambda, Nh));
  auto I = HSeriesMatrix::constant(CMat::identity(M.dim), Nh);
  auto v2 = scale(I, h_exp(2.0 * lambda, Nh));
  return ((Mp + I) * (Mp - v2)).max_abs();
}

AbaResult aba_obstruction(int m, int j, double alpha) {
  if (std::abs(1.0 + 2.0 * std::cos(alpha)) < 1e-12) throw std::domain_error("alpha lies on the pole 1 + 2cos(alpha) = 0");
  Complex u = std::polar(1.0, alpha);
  if (std::abs(1.0 + u) < 1e-12) throw std::domain_error("u = -1: the eigenspaces of the Hecke generators merge");
  Complex v = std::polar(1.0, alpha / 2.0);
  auto H = hecke_rep(m, j, v);
  auto I = CMat::identity(2);
  // (M − u)/(−1 − u) kills the u-eigenspace and fixes the (−1)-eigenspace.
  CMat a = (H.sigma - I * u) * (-1.0 / (1.0 + u));
  CMat b = (H.tau - I * u) * (-1.0 / (1.0 + u));
  AbaResult res;
  res.spectrum = eigenvalues2(a * b * a);
  res.unitarizable = std::cos(alpha) > -0.5;
  Complex top = res.spectrum.back();
  res.spectral_bound_ok = std::abs(top.imag()) < 1e-10 && top.real() > 1e-12 && top.real() <= 1.0 + 1e-12;
  return res;
}

}  // namespace assoc_lab
