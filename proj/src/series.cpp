#include "assoc_lab/series.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

namespace assoc_lab {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  auto slash = t.find('/');
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  Rational r;
  if (slash == std::string::npos) {
    if (!digits_ok(t, true)) throw std::invalid_argument("bad rational: " + text);
    r = Rational(mpz_class(t));
  } else {
    std::string p = t.substr(0, slash), q = t.substr(slash + 1);
    if (!digits_ok(p, true) || !digits_ok(q, false)) throw std::invalid_argument("bad rational: " + text);
    mpz_class den(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    r = Rational(mpz_class(p), den);
    r.canonicalize();
  }
  return r;
}

// ---------------------------------------------------------------- Layout

Layout::Layout(int g, int N) : g_(g), N_(N) {
  pow_.assign(N + 1, 1);
  for (int i = 1; i <= N; ++i) pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(g);
  offset_.resize(N + 1);
  std::size_t total = 0;
  for (int d = 0; d <= N; ++d) {
    offset_[d].resize(d + 1);
    for (int k = 0; k <= d; ++k) {
      offset_[d][k] = total;
      total += pow_[d - k];
      if (total > (std::size_t(1) << 26)) throw std::length_error("series layout too large");
    }
  }
  keys_.resize(total);
  for (int d = 0; d <= N; ++d)
    for (int k = 0; k <= d; ++k)
      for (std::uint64_t c = 0; c < pow_[d - k]; ++c) keys_[offset_[d][k] + c] = Key{d, k, c};
}

std::shared_ptr<const Layout> Layout::get(int g, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Layout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{g, N}];
  if (!slot) slot = std::shared_ptr<const Layout>(new Layout(g, N));
  return slot;
}

Key Layout::make_key(const Word& w, int tpow) const {
  std::uint64_t code = 0;
  for (int x : w) {
    if (x < 0 || x >= g_) throw std::out_of_range("letter out of range");
    code = code * g_ + static_cast<std::uint64_t>(x);
  }
  return Key{static_cast<int>(w.size()) + tpow, tpow, code};
}

Word Layout::word(const Key& k) const {
  Word w(k.length());
  std::uint64_t c = k.code;
  for (int i = k.length() - 1; i >= 0; --i) {
    w[i] = static_cast<int>(c % g_);
    c /= g_;
  }
  return w;
}

static Key concat(const Layout& L, const Key& a, const Key& b) {
  return Key{a.deg + b.deg, a.tpow + b.tpow, a.code * L.power(b.length()) + b.code};
}

// ---------------------------------------------------------------- Series

namespace {

constexpr double kRelativePrune = 1e-14;

template <class K>
void prune_terms(std::vector<typename Series<K>::Term>& terms) {
  if constexpr (Field<K>::exact) {
    std::erase_if(terms, [](const auto& t) { return Field<K>::is_zero(t.coeff); });
  } else {
    std::vector<double> top;
    for (const auto& t : terms) {
      if (static_cast<int>(top.size()) <= t.key.deg) top.resize(t.key.deg + 1, 0.0);
      top[t.key.deg] = std::max(top[t.key.deg], Field<K>::magnitude(t.coeff));
    }
    std::erase_if(terms, [&](const auto& t) {
      double a = Field<K>::magnitude(t.coeff);
      return a == 0.0 || a <= kRelativePrune * top[t.key.deg];
    });
  }
}

template <class K>
class Accumulator {
 public:
  explicit Accumulator(const Layout& L) : L_(L), val_(L.size()), used_(L.size(), 0) {}
  K& at(std::size_t i) {
    used_[i] = 1;
    return val_[i];
  }
  std::vector<typename Series<K>::Term> collect() {
    std::vector<typename Series<K>::Term> out;
    for (std::size_t i = 0; i < used_.size(); ++i)
      if (used_[i]) out.push_back({L_.key(i), std::move(val_[i])});
    prune_terms<K>(out);
    return out;
  }

 private:
  const Layout& L_;
  std::vector<K> val_;
  std::vector<char> used_;
};

}  // namespace

template <class K>
Series<K>::Series(int m, int N) : m_(m), N_(N) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (N < 0) throw std::invalid_argument("negative truncation");
  layout_ = Layout::get(m - 1, N);
}

template <class K>
void Series<K>::check_compatible(const Series& b) const {
  if (m_ != b.m_ || N_ != b.N_)
    throw std::invalid_argument("series mismatch: (m,N)=(" + std::to_string(m_) + "," + std::to_string(N_) +
                                ") vs (" + std::to_string(b.m_) + "," + std::to_string(b.N_) + ")");
}

template <class K>
void Series<K>::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().key == t.key)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  prune_terms<K>(merged);
  terms_ = std::move(merged);
}

template <class K>
Series<K> Series<K>::from_terms(int m, int N, std::vector<Term> terms) {
  Series s(m, N);
  for (const auto& t : terms) {
    if (t.key.tpow < 0 || t.key.length() < 0) throw std::invalid_argument("bad monomial");
    if (t.key.length() > 0 && t.key.code >= s.layout_->power(t.key.length()))
      throw std::invalid_argument("word code out of range");
  }
  std::erase_if(terms, [N](const Term& t) { return t.key.deg > N; });
  s.terms_ = std::move(terms);
  s.normalize();
  return s;
}

template <class K>
Series<K> Series<K>::one(int m, int N) {
  return scalar(m, N, Field<K>::one());
}

template <class K>
Series<K> Series<K>::scalar(int m, int N, const K& c) {
  Series s(m, N);
  if (!Field<K>::is_zero(c)) s.terms_.push_back({Key{0, 0, 0}, c});
  return s;
}

template <class K>
Series<K> Series<K>::monomial(int m, int N, const Word& w, int tpow, const K& c) {
  Series s(m, N);
  Key k = s.layout_->make_key(w, tpow);
  if (k.deg <= N && !Field<K>::is_zero(c)) s.terms_.push_back({k, c});
  return s;
}

template <class K>
Series<K> Series<K>::gen(int m, int N, int r) {
  r = ((r % m) + m) % m;
  if (r < m - 1) return monomial(m, N, Word{r}, 0, Field<K>::one());
  Series s(m, N);
  if (N >= 1)
    for (int i = 0; i < m - 1; ++i) s.terms_.push_back({Key{1, 0, static_cast<std::uint64_t>(i)}, -Field<K>::one()});
  return s;
}

template <class K>
Series<K> Series<K>::t_central(int m, int N) {
  return monomial(m, N, Word{}, 1, Field<K>::one());
}

template <class K>
Series<K> Series<K>::full_gen(int m, int N, int r) {
  return gen(m, N, r) + t_central(m, N) * Field<K>::from_ratio(1, m);
}

template <class K>
K Series<K>::coeff(const Word& w, int tpow) const {
  Key k = layout_->make_key(w, tpow);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, const Key& x) { return t.key < x; });
  if (it != terms_.end() && it->key == k) return it->coeff;
  return Field<K>::zero();
}

template <class K>
K Series<K>::constant() const {
  if (!terms_.empty() && terms_.front().key.deg == 0) return terms_.front().coeff;
  return Field<K>::zero();
}

template <class K>
bool Series<K>::is_tfree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.key.tpow == 0; });
}

template <class K>
int Series<K>::valuation() const {
  return terms_.empty() ? -1 : terms_.front().key.deg;
}

template <class K>
Series<K> Series<K>::degree_part(int d) const {
  Series s(m_, N_);
  for (const auto& t : terms_)
    if (t.key.deg == d) s.terms_.push_back(t);
  return s;
}

template <class K>
Series<K> Series<K>::with_truncation(int n) const {
  Series s(m_, n);
  for (const auto& t : terms_)
    if (t.key.deg <= n) s.terms_.push_back(t);
  return s;
}

template <class K>
Series<K> Series<K>::tfree_part() const {
  Series s(m_, N_);
  for (const auto& t : terms_)
    if (t.key.tpow == 0) s.terms_.push_back(t);
  return s;
}

template <class K>
double Series<K>::max_abs() const {
  double r = 0.0;
  for (const auto& t : terms_) r = std::max(r, Field<K>::magnitude(t.coeff));
  return r;
}

template <class K>
double Series<K>::max_abs_degree(int d) const {
  double r = 0.0;
  for (const auto& t : terms_)
    if (t.key.deg == d) r = std::max(r, Field<K>::magnitude(t.coeff));
  return r;
}

template <class K>
Series<K> Series<K>::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

template <class K>
Series<K>& Series<K>::operator+=(const Series& b) {
  check_compatible(b);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < terms_.size() && terms_[i].key < b.terms_[j].key)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || b.terms_[j].key < terms_[i].key) {
      out.push_back(b.terms_[j++]);
    } else {
      K c = terms_[i].coeff + b.terms_[j].coeff;
      out.push_back({terms_[i].key, c});
      ++i;
      ++j;
    }
  }
  prune_terms<K>(out);
  terms_ = std::move(out);
  return *this;
}

template <class K>
Series<K>& Series<K>::operator-=(const Series& b) {
  return *this += -b;
}

template <class K>
Series<K>& Series<K>::operator*=(const K& c) {
  if (Field<K>::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  if constexpr (!Field<K>::exact) prune_terms<K>(terms_);
  return *this;
}

template <class K>
Series<K> Series<K>::mul(const Series& b) const {
  check_compatible(b);
  const Layout& L = *layout_;
  Accumulator<K> acc(L);
  K prod;
  for (const auto& x : terms_) {
    int room = N_ - x.key.deg;
    if (room < 0) break;
    for (const auto& y : b.terms_) {
      if (y.key.deg > room) break;
      prod = x.coeff * y.coeff;
      acc.at(L.index(concat(L, x.key, y.key))) += prod;
    }
  }
  Series s(m_, N_);
  s.terms_ = acc.collect();
  return s;
}

template <class K>
bool Series<K>::operator==(const Series& b) const {
  if (m_ != b.m_ || N_ != b.N_ || terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].key != b.terms_[i].key || terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------- functions

template <class K>
Series<K> commutator(const Series<K>& a, const Series<K>& b) {
  return a * b - b * a;
}

template <class K>
Series<K> series_exp(const Series<K>& x) {
  if (!Field<K>::is_zero(x.constant())) throw std::domain_error("exp needs zero constant term");
  auto one = Series<K>::one(x.m(), x.truncation());
  Series<K> r = one;
  for (int k = x.truncation(); k >= 1; --k) r = one + (x * r) * Field<K>::from_ratio(1, k);
  return r;
}

template <class K>
Series<K> series_log(const Series<K>& g) {
  K c = g.constant();
  if constexpr (Field<K>::exact) {
    if (c != Field<K>::one()) throw std::domain_error("log needs constant term 1");
  } else {
    if (std::abs(c - Field<K>::one()) > 1e-9) throw std::domain_error("log needs constant term 1");
  }
  int N = g.truncation();
  auto y = g - Series<K>::scalar(g.m(), N, c);
  if (N == 0) return Series<K>(g.m(), N);
  Series<K> r = Series<K>::scalar(g.m(), N, Field<K>::from_ratio(1, N));
  for (int k = N - 1; k >= 1; --k) r = Series<K>::scalar(g.m(), N, Field<K>::from_ratio(1, k)) - y * r;
  return y * r;
}

template <class K>
Series<K> series_inverse(const Series<K>& g) {
  K c = g.constant();
  if (Field<K>::is_zero(c)) throw std::domain_error("inverse needs nonzero constant term");
  K ci = Field<K>::one() / c;
  auto one = Series<K>::one(g.m(), g.truncation());
  auto y = one - g * ci;
  Series<K> r = one;
  for (int k = 0; k < g.truncation(); ++k) r = one + y * r;
  return r * ci;
}

template <class K>
Series<K> substitute(const Series<K>& g, const std::vector<Series<K>>& images, const Series<K>& image_t) {
  int m = image_t.m(), N = image_t.truncation();
  if (static_cast<int>(images.size()) != g.letters()) throw std::invalid_argument("wrong number of images");
  for (const auto& im : images) {
    im.check_compatible(image_t);
    if (!Field<K>::is_zero(im.constant())) throw std::invalid_argument("image with constant term");
  }
  if (!Field<K>::is_zero(image_t.constant())) throw std::invalid_argument("image of T with constant term");

  int g_letters = g.letters();
  // Images of word prefixes, keyed by (length, code).
  std::map<std::pair<int, std::uint64_t>, Series<K>> memo;
  memo.emplace(std::make_pair(0, std::uint64_t(0)), Series<K>::one(m, N));
  auto image_of = [&](int len, std::uint64_t code, auto&& self) -> const Series<K>& {
    auto it = memo.find({len, code});
    if (it != memo.end()) return it->second;
    int last = static_cast<int>(code % g_letters);
    const Series<K>& prefix = self(len - 1, code / g_letters, self);
    auto val = prefix * images[last];
    return memo.emplace(std::make_pair(len, code), std::move(val)).first->second;
  };

  std::map<int, Series<K>> by_tpow;
  for (const auto& t : g.terms()) {
    auto& slot = by_tpow.try_emplace(t.key.tpow, m, N).first->second;
    slot += image_of(t.key.length(), t.key.code, image_of) * t.coeff;
  }
  Series<K> out(m, N);
  Series<K> tpow_image = Series<K>::one(m, N);
  int have = 0;
  for (auto& [k, s] : by_tpow) {
    while (have < k) {
      tpow_image = tpow_image * image_t;
      ++have;
    }
    out += s * tpow_image;
  }
  return out;
}

template <class K>
double distance(const Series<K>& a, const Series<K>& b) {
  return (a - b).max_abs();
}

template <class K>
bool approx_equal(const Series<K>& a, const Series<K>& b, double tol) {
  if constexpr (Field<K>::exact) {
    (void)tol;
    return a == b;
  } else {
    return distance(a, b) <= tol;
  }
}

Series<Complex> to_complex(const Series<Rational>& x) {
  std::vector<Series<Complex>::Term> terms;
  for (const auto& t : x.terms()) terms.push_back({t.key, to_complex(t.coeff)});
  return Series<Complex>::from_terms(x.m(), x.truncation(), std::move(terms));
}

// ---------------------------------------------------------------- Tensor

template <class K>
Tensor<K>::Tensor(int m, int N) : m_(m), N_(N), layout_(Layout::get(m - 1, N)) {}

template <class K>
void Tensor<K>::add(std::uint32_t i, std::uint32_t j, const K& c) {
  auto [it, fresh] = entries_.try_emplace({i, j}, c);
  if (!fresh) it->second += c;
}

template <class K>
Tensor<K> Tensor<K>::outer(const Series<K>& a, const Series<K>& b) {
  a.check_compatible(b);
  Tensor t(a.m(), a.truncation());
  const Layout& L = a.layout();
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      if (x.key.deg + y.key.deg > t.N_) break;
      t.add(static_cast<std::uint32_t>(L.index(x.key)), static_cast<std::uint32_t>(L.index(y.key)), x.coeff * y.coeff);
    }
  t.prune();
  return t;
}

template <class K>
K Tensor<K>::coeff(const Word& u, int tu, const Word& v, int tv) const {
  auto i = layout_->index(layout_->make_key(u, tu));
  auto j = layout_->index(layout_->make_key(v, tv));
  auto it = entries_.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return it == entries_.end() ? Field<K>::zero() : it->second;
}

template <class K>
Tensor<K>& Tensor<K>::operator+=(const Tensor& b) {
  for (const auto& [ij, c] : b.entries_) add(ij.first, ij.second, c);
  prune();
  return *this;
}

template <class K>
Tensor<K>& Tensor<K>::operator-=(const Tensor& b) {
  for (const auto& [ij, c] : b.entries_) add(ij.first, ij.second, -c);
  prune();
  return *this;
}

template <class K>
Tensor<K> Tensor<K>::mul(const Tensor& b) const {
  if (m_ != b.m_ || N_ != b.N_) throw std::invalid_argument("tensor mismatch");
  Tensor out(m_, N_);
  const Layout& L = *layout_;
  for (const auto& [ij, c] : entries_) {
    const Key& a1 = L.key(ij.first);
    const Key& a2 = L.key(ij.second);
    for (const auto& [kl, d] : b.entries_) {
      const Key& b1 = L.key(kl.first);
      const Key& b2 = L.key(kl.second);
      if (a1.deg + a2.deg + b1.deg + b2.deg > N_) continue;
      out.add(static_cast<std::uint32_t>(L.index(concat(L, a1, b1))),
              static_cast<std::uint32_t>(L.index(concat(L, a2, b2))), c * d);
    }
  }
  out.prune();
  return out;
}

template <class K>
double Tensor<K>::max_abs() const {
  double r = 0.0;
  for (const auto& [ij, c] : entries_) r = std::max(r, Field<K>::magnitude(c));
  return r;
}

template <class K>
void Tensor<K>::prune() {
  std::erase_if(entries_, [](const auto& e) { return Field<K>::is_zero(e.second); });
}

template <class K>
Tensor<K> coproduct(const Series<K>& g) {
  Tensor<K> out(g.m(), g.truncation());
  const Layout& L = g.layout();
  const std::uint64_t G = static_cast<std::uint64_t>(g.letters());
  for (const auto& t : g.terms()) {
    Word w = L.word(t.key);
    int len = t.key.length(), k = t.key.tpow;
    std::vector<K> binom(k + 1);
    mpz_class b = 1;
    for (int j = 0; j <= k; ++j) {
      binom[j] = Field<K>::from_int(b.get_si());
      b = b * (k - j) / (j + 1);
    }
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      std::uint64_t lc = 0, rc = 0;
      int ll = 0;
      for (int p = 0; p < len; ++p) {
        if (mask & (1u << (len - 1 - p))) {
          lc = lc * G + w[p];
          ++ll;
        } else {
          rc = rc * G + w[p];
        }
      }
      for (int j = 0; j <= k; ++j) {
        Key lk{ll + j, j, lc}, rk{len - ll + k - j, k - j, rc};
        out.add(static_cast<std::uint32_t>(L.index(lk)), static_cast<std::uint32_t>(L.index(rk)), t.coeff * binom[j]);
      }
    }
  }
  out.prune();
  return out;
}

template <class K>
bool is_grouplike(const Series<K>& g, double tol) {
  K c = g.constant();
  auto diff = coproduct(g);
  diff -= Tensor<K>::outer(g, g);
  if constexpr (Field<K>::exact) {
    (void)tol;
    return c == Field<K>::one() && diff.entries().empty();
  } else {
    return std::abs(c - Field<K>::one()) <= tol && diff.max_abs() <= tol;
  }
}

template <class K>
bool is_primitive(const Series<K>& x, double tol) {
  auto one = Series<K>::one(x.m(), x.truncation());
  auto diff = coproduct(x);
  diff -= Tensor<K>::outer(x, one);
  diff -= Tensor<K>::outer(one, x);
  if constexpr (Field<K>::exact) {
    (void)tol;
    return diff.entries().empty();
  } else {
    return diff.max_abs() <= tol;
  }
}

// ---------------------------------------------------------------- Lyndon

std::vector<Word> lyndon_words(int g, int n) {
  std::vector<Word> out;
  if (n < 1 || g < 1) return out;
  Word w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    std::size_t period = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == g - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::size_t witt_number(int g, int n) {
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
      }
    }
    if (d > 1) r = -r;
    return r;
  };
  mpz_class total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(n / d));
    total += mobius(d) * p;
  }
  return static_cast<std::size_t>(mpz_class(total / n).get_ui());
}

static bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

template <class K>
Series<K> lyndon_bracket(int m, int N, const Word& w) {
  if (w.size() == 1) return Series<K>::gen(m, N, w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) {
      Word u(w.begin(), w.begin() + i);
      return commutator(lyndon_bracket<K>(m, N, u), lyndon_bracket<K>(m, N, v));
    }
  }
  throw std::logic_error("not a Lyndon word");
}

template <class K>
std::vector<LyndonElement<K>> lyndon_basis(int num_gens, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<LyndonElement<K>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({num_gens, degree});
  if (it != cache.end()) return it->second;
  std::vector<LyndonElement<K>> out;
  for (auto& w : lyndon_words(num_gens, degree)) out.push_back({w, lyndon_bracket<K>(num_gens + 1, degree, w)});
  cache[{num_gens, degree}] = out;
  return out;
}

template <class K>
std::vector<K> lie_coordinates(const Series<K>& x, int n, double tol) {
  auto basis = lyndon_basis<K>(x.letters(), n);
  Series<K> rest = x.degree_part(n).with_truncation(n);
  std::vector<K> coords;
  coords.reserve(basis.size());
  for (const auto& b : basis) {
    K c = rest.coeff(b.word);
    coords.push_back(c);
    if (!Field<K>::is_zero(c)) rest -= b.bracket * c;
  }
  double r = rest.max_abs();
  if constexpr (Field<K>::exact) {
    (void)tol;
    if (!rest.is_zero()) throw std::domain_error("element is not in the free Lie algebra");
  } else {
    if (r > tol) throw std::domain_error("element is not in the free Lie algebra (remainder " + std::to_string(r) + ")");
  }
  return coords;
}

template <class K>
Series<K> from_lie_coordinates(int m, int N, int n, const std::vector<K>& coords) {
  auto basis = lyndon_basis<K>(m - 1, n);
  if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count mismatch");
  Series<K> out(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!Field<K>::is_zero(coords[i])) out += basis[i].bracket * coords[i];
  return out.with_truncation(N);
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (int x : w) os << 't' << x;
  return w.empty() ? "1" : os.str();
}

#define ASSOC_LAB_INSTANTIATE(K)                                                                      \
  template class Series<K>;                                                                           \
  template class Tensor<K>;                                                                           \
  template Series<K> commutator(const Series<K>&, const Series<K>&);                                 \
  template Series<K> series_exp(const Series<K>&);                                                    \
  template Series<K> series_log(const Series<K>&);                                                    \
  template Series<K> series_inverse(const Series<K>&);                                                \
  template Series<K> substitute(const Series<K>&, const std::vector<Series<K>>&, const Series<K>&);  \
  template double distance(const Series<K>&, const Series<K>&);                                       \
  template bool approx_equal(const Series<K>&, const Series<K>&, double);                             \
  template Tensor<K> coproduct(const Series<K>&);                                                     \
  template bool is_grouplike(const Series<K>&, double);                                               \
  template bool is_primitive(const Series<K>&, double);                                               \
  template Series<K> lyndon_bracket(int, int, const Word&);                                           \
  template std::vector<LyndonElement<K>> lyndon_basis(int, int);                                      \
  template std::vector<K> lie_coordinates(const Series<K>&, int, double);                             \
  template Series<K> from_lie_coordinates(int, int, int, const std::vector<K>&);

ASSOC_LAB_INSTANTIATE(Rational)
ASSOC_LAB_INSTANTIATE(Complex)

}  // namespace assoc_lab
