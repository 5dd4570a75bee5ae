#include "assoc_lab/morphism.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace assoc_lab {

BWord BWord::times(Letter l, int e) const {
  BWord out = *this;
  if (e == 0) return out;
  if (!out.runs_.empty() && out.runs_.back().first == l) {
    out.runs_.back().second += e;
    if (out.runs_.back().second == 0) out.runs_.pop_back();
  } else {
    out.runs_.emplace_back(l, e);
  }
  return out;
}

BWord BWord::alternating(Letter first, int n, int e) {
  BWord out;
  Letter l = first;
  for (int i = 0; i < n; ++i) {
    out = out.times(l, e);
    l = (l == Sigma) ? Tau : Sigma;
  }
  return out;
}

BWord BWord::parse(const std::string& text) {
  BWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i++];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') continue;
    Letter l;
    int sign = 1;
    switch (ch) {
      case 's': l = Sigma; break;
      case 't': l = Tau; break;
      case 'S': l = Sigma; sign = -1; break;
      case 'T': l = Tau; sign = -1; break;
      default: throw std::invalid_argument(std::string("unknown braid letter '") + ch + "'");
    }
    int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t used = 0;
      try {
        e = std::stoi(text.substr(i), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in braid word");
      }
      i += used;
    }
    out = out.times(l, sign * e);
  }
  return out;
}

BWord BWord::operator*(const BWord& b) const {
  BWord out = *this;
  for (const auto& [l, e] : b.runs_) out = out.times(l, e);
  return out;
}

BWord BWord::inverse() const {
  BWord out;
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out = out.times(it->first, -it->second);
  return out;
}

BWord BWord::power(int k) const {
  BWord base = k < 0 ? inverse() : *this;
  BWord out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

int BWord::exponent_sum() const {
  int s = 0;
  for (const auto& r : runs_) s += r.second;
  return s;
}

std::string BWord::str() const {
  if (runs_.empty()) return "1";
  std::ostringstream os;
  for (const auto& [l, e] : runs_) {
    os << static_cast<char>(e < 0 ? std::toupper(l) : l);
    if (std::abs(e) != 1) os << '^' << std::abs(e);
  }
  return os.str();
}

template <class K>
FlatElem<K> central_exp(int m, int N, const K& coeff) {
  return FlatElem<K>::single(w_identity(), series_exp(Series<K>::t_central(m, N) * coeff));
}

template <class K>
Morphism<K> build_morphism(const AssociatorCandidate<K>& c, bool central, bool validate, double tol) {
  if (validate) {
    auto reports = check_suite(c, tol);
    for (const auto& r : reports)
      if (!r.pass) throw std::invalid_argument("associator candidate fails the " + r.equation + " equation");
  }
  int m = c.m, N = c.truncation();
  Morphism<K> M;
  M.m = m;
  M.lambda = c.lambda;
  M.assoc = c;
  M.central = central;
  auto g0 = central ? Series<K>::full_gen(m, N, 0) : Series<K>::gen(m, N, 0);
  auto g1 = central ? Series<K>::full_gen(m, N, 1) : Series<K>::gen(m, N, 1);
  auto e0 = series_exp(g0 * c.lambda);
  auto e1 = series_exp(g1 * c.lambda);
  auto phi = FlatElem<K>::single(w_identity(), c.phi);
  auto phi_inv = FlatElem<K>::single(w_identity(), series_inverse(c.phi));
  M.sigma = FlatElem<K>::single(w_s(), e0);
  M.tau = phi * FlatElem<K>::single(w_omega_s(m), e1) * phi_inv;
  M.sigma_inv = flat_inv(M.sigma);
  M.tau_inv = flat_inv(M.tau);
  return M;
}

template <class K>
FlatElem<K> eval_word(const Morphism<K>& M, const BWord& w) {
  int N = M.assoc.truncation();
  auto out = FlatElem<K>::identity(M.m, N);
  for (const auto& [l, e] : w.runs()) {
    const auto& g = l == BWord::Sigma ? (e > 0 ? M.sigma : M.sigma_inv) : (e > 0 ? M.tau : M.tau_inv);
    for (int i = 0; i < std::abs(e); ++i) out = out * g;
  }
  return out;
}

template <class K>
std::vector<CheckLine> verify_artin(const Morphism<K>& M, double tol) {
  int m = M.m, N = M.assoc.truncation();
  std::vector<CheckLine> out;
  auto a = eval_word(M, BWord::alternating(BWord::Sigma, m));
  auto b = eval_word(M, BWord::alternating(BWord::Tau, m));
  double r = distance(a, b);
  out.push_back({"artin", r <= tol, r});
  // O-image: the alternating word of length m itself.
  FlatElem<K> expect(m, N);
  auto eT = series_exp(Series<K>::t_central(m, N) * M.lambda);
  if (!M.central) eT = Series<K>::one(m, N);
  if (m % 2 == 1)
    expect = FlatElem<K>::single(w_mul(m, w_s(), w_omega(m, (m - 1) / 2)), series_inverse(M.assoc.phi) * eT);
  else
    expect = FlatElem<K>::single(w_omega(m, m / 2), eT);
  r = distance(a, expect);
  out.push_back({"o_image", r <= tol, r});
  return out;
}

template <class K>
CheckLine verify_center(const Morphism<K>& M, double tol) {
  int m = M.m, N = M.assoc.truncation();
  auto expect = M.central ? central_exp(m, N, K(M.lambda * Field<K>::from_int(2))) : FlatElem<K>::identity(m, N);
  auto st = eval_word(M, (BWord::sigma() * BWord::tau()).power(m));
  auto ts = eval_word(M, (BWord::tau() * BWord::sigma()).power(m));
  double r = std::max(distance(st, expect), distance(ts, expect));
  return {"center", r <= tol, r};
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

BWord ts_pow(int k) { return (BWord::tau() * BWord::sigma()).power(k); }

}  // namespace

BWord pure_u(int m, int r) {
  r = mod(r, m);
  if (r % 2 == 0) return BWord::sigma(2).conj(ts_pow(r / 2));
  return BWord::tau(2).conj(ts_pow((r - 1) / 2));
}

BWord pure_x(int m, int r) {
  BWord out;
  if (r >= 1) {
    for (int j = r; j >= 1; --j) out = out * pure_u(m, j);
  } else {
    out = pure_u(m, 0);
    for (int j = m - 1; j >= m + r; --j) out = out * pure_u(m, j);
  }
  return out;
}

namespace {

struct TableEntry {
  std::string name;
  BWord defining;
  BWord closed;
  bool omega_half = false;
  int central_power = 0;  // number of Z^{1/m} factors removed
};

// (σ⁻¹τ⁻¹)^k and (τ⁻¹σ⁻¹)^k etc.  alternating words of n letters.
BWord alt(BWord::Letter first, int n, int e = 1) { return BWord::alternating(first, n, e); }

std::vector<TableEntry> table_entries(int m) {
  using L = BWord::Letter;
  std::vector<TableEntry> out;
  const BWord s = BWord::sigma(), t = BWord::tau();
  const BWord st = s * t, tsw = t * s;
  const BWord SiTi = BWord::sigma(-1) * BWord::tau(-1), TiSi = BWord::tau(-1) * BWord::sigma(-1);
  // x̃ family, positive indices below m/2.
  for (int r = 1; 2 * r < m; ++r) {
    BWord closed;
    if (r % 2 == 0) closed = tsw.power(r / 2) * st.power(r / 2);
    else closed = (tsw.power((r - 1) / 2) * t).power(2);
    out.push_back({"x" + std::to_string(r), pure_x(m, r), closed, false, r});
  }
  // Non-positive indices above 1 − m/2.
  for (int r = 0; 2 * r > 2 - m; --r) {
    BWord closed;
    int q = -r;
    if (q % 2 == 0) closed = (st.power(q / 2) * s).power(2);
    else closed = st.power((q + 1) / 2) * tsw.power((q + 1) / 2);
    out.push_back({"x" + std::to_string(r), pure_x(m, r), closed, false, q + 1});
  }
  if (m % 2 == 0) {
    int h = m / 2;
    BWord a, b;
    if (h % 2 == 0) {
      a = SiTi.power(h / 2) * st.power(h / 2);
      b = TiSi.power(h / 2) * tsw.power(h / 2);
    } else {
      a = alt(L::Sigma, h, -1) * alt(L::Tau, h);
      b = alt(L::Tau, h, -1) * alt(L::Sigma, h);
    }
    out.push_back({"x" + std::to_string(h), pure_x(m, h), a, true, h});
    out.push_back({"x" + std::to_string(1 - h), pure_x(m, 1 - h), b, true, h});
  }
  // ũ family.
  for (int j = 2; 2 * j < m; ++j) out.push_back({"u" + std::to_string(j), pure_u(m, j), pure_u(m, j), false, 1});
  for (int j = m - 1; 2 * j > m + 2; --j) {
    BWord closed;
    if ((m - j) % 2 == 0) closed = BWord::sigma(2).conj(ts_pow(-(m - j) / 2));
    else closed = BWord::tau(2).conj(ts_pow(-(m - j + 1) / 2));
    out.push_back({"u" + std::to_string(j), pure_u(m, j), closed, false, 1});
  }
  if (m % 2 == 0) {
    int h = m / 2;
    BWord a, b;
    if (h % 2 == 0) {
      a = SiTi.power(h / 2) * BWord::sigma(2) * SiTi.power(h / 2);
      b = SiTi.power(h / 2) * BWord::tau(2) * TiSi.power(h) * tsw.power(h / 2);
    } else {
      a = alt(L::Sigma, h, -1) * BWord::tau(2) * alt(L::Tau, h, -1);
      b = SiTi.power((h - 1) / 2) * TiSi.power(h) * BWord::sigma(2) * tsw.power((h - 1) / 2);
    }
    out.push_back({"u" + std::to_string(h), pure_u(m, h), a, true, 1});
    out.push_back({"u" + std::to_string(h + 1), pure_u(m, h + 1), b, true, 1});
  }
  return out;
}

}  // namespace

template <class K>
std::vector<CheckLine> pure_braid_tables(const AssociatorCandidate<K>& c, double tol) {
  int m = c.m, N = c.truncation();
  auto bar = build_morphism(c, true, false);
  auto tilde = build_morphism(c, false, false);
  const K two_lambda_over_m = c.lambda * Field<K>::from_ratio(2, m);
  std::vector<CheckLine> out;
  for (const auto& e : table_entries(m)) {
    auto lhs = eval_word(bar, e.defining);
    auto rhs = eval_word(tilde, e.closed);
    if (e.omega_half) rhs = FlatElem<K>::single(w_omega(m, m / 2), Series<K>::one(m, N)) * rhs;
    rhs = rhs * central_exp(m, N, K(two_lambda_over_m * Field<K>::from_int(e.central_power)));
    double r = distance(lhs, rhs);
    out.push_back({"table_" + e.name, r <= tol, r});
  }
  // u_{m-1} ⋯ u_0 = Z.
  BWord prod;
  for (int j = m - 1; j >= 0; --j) prod = prod * pure_u(m, j);
  double r = distance(eval_word(bar, prod), central_exp(m, N, K(c.lambda * Field<K>::from_int(2))));
  out.push_back({"u_product", r <= tol, r});
  return out;
}

template Morphism<Rational> build_morphism(const AssociatorCandidate<Rational>&, bool, bool, double);
template Morphism<Complex> build_morphism(const AssociatorCandidate<Complex>&, bool, bool, double);
template FlatElem<Rational> eval_word(const Morphism<Rational>&, const BWord&);
template FlatElem<Complex> eval_word(const Morphism<Complex>&, const BWord&);
template FlatElem<Rational> central_exp(int, int, const Rational&);
template FlatElem<Complex> central_exp(int, int, const Complex&);
template std::vector<CheckLine> verify_artin(const Morphism<Rational>&, double);
template std::vector<CheckLine> verify_artin(const Morphism<Complex>&, double);
template CheckLine verify_center(const Morphism<Rational>&, double);
template CheckLine verify_center(const Morphism<Complex>&, double);
template std::vector<CheckLine> pure_braid_tables(const AssociatorCandidate<Rational>&, double);
template std::vector<CheckLine> pure_braid_tables(const AssociatorCandidate<Complex>&, double);

}  // namespace assoc_lab
