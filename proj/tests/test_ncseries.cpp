#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc_lab/linalg.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {
SQ t(int m, int N, int r) { return SQ::gen(m, N, r); }
SQ one(int m, int N) { return SQ::one(m, N); }
}  // namespace

TEST_CASE("addition cancels and keeps distinct words") {
  CHECK((one(3, 3) + t(3, 3, 0)) + (one(3, 3) - t(3, 3, 0)) == SQ::scalar(3, 3, Q(2)));
  auto x = t(3, 3, 0) * t(3, 3, 1);
  CHECK(x + SQ(3, 3) == x);
  auto y = x + t(3, 3, 1) * t(3, 3, 0);
  CHECK(y.size() == 2);
  CHECK(y.coeff({0, 1}) == 1);
  CHECK(y.coeff({1, 0}) == 1);
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(one(3, 2) + one(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(one(3, 2) * one(4, 2), std::invalid_argument);
}

TEST_CASE("multiplication") {
  auto w = t(4, 3, 0) * t(4, 3, 1);
  CHECK(w.size() == 1);
  CHECK(w.coeff({0, 1}) == 1);
  auto a = one(3, 2) + t(3, 2, 0);
  auto b = one(3, 2) - t(3, 2, 0) + t(3, 2, 0) * t(3, 2, 0);
  CHECK(a * b == one(3, 2));
  auto a3 = one(3, 3) + t(3, 3, 0);
  auto b3 = one(3, 3) - t(3, 3, 0) + t(3, 3, 0) * t(3, 3, 0);
  CHECK(a3 * b3 == one(3, 3) + t(3, 3, 0) * t(3, 3, 0) * t(3, 3, 0));
}

TEST_CASE("t_{m-1} is eliminated and brackets collapse for m = 3") {
  auto t2 = t(3, 3, 2);
  CHECK(t2 == -(t(3, 3, 0) + t(3, 3, 1)));
  auto b01 = commutator(t(3, 3, 0), t(3, 3, 1));
  CHECK(commutator(t(3, 3, 1), t2) == b01);
  CHECK(commutator(t2, t(3, 3, 0)) == b01);
  CHECK(t(5, 2, 7) == t(5, 2, 2));
  CHECK(t(5, 2, -1) == t(5, 2, 4));
}

TEST_CASE("T is central and of degree one") {
  auto T = SQ::t_central(4, 3);
  auto x = t(4, 3, 0) * t(4, 3, 2);
  CHECK(T * x == x * T);
  CHECK((T * T * T * T).is_zero());
  CHECK(!T.is_tfree());
  CHECK(SQ::full_gen(4, 3, 1) == t(4, 3, 1) + T * Q(1, 4));
}

TEST_CASE("graded locality of the product") {
  std::mt19937 rng(kSeed);
  for (int i = 0; i < 20; ++i) {
    auto a = rand_series(rng, 4, 4, rand_q(rng)), b = rand_series(rng, 4, 4, rand_q(rng));
    auto full = a * b;
    for (int d = 0; d <= 4; ++d)
      CHECK((a.with_truncation(d) * b.with_truncation(d)).degree_part(d) == full.degree_part(d).with_truncation(d));
  }
}

TEST_CASE("exp and log") {
  CHECK(series_exp(SQ(3, 3)) == one(3, 3));
  Q lam(3, 2);
  auto e = series_exp(t(3, 2, 0) * lam);
  CHECK(e == one(3, 2) + t(3, 2, 0) * lam + t(3, 2, 0) * t(3, 2, 0) * (lam * lam / 2));
  CHECK_THROWS_AS(series_exp(one(3, 2)), std::domain_error);
  CHECK_THROWS_AS(series_log(t(3, 2, 0)), std::domain_error);
}

TEST_CASE("BCH through degree 2 against direct expansion") {
  int N = 2;
  auto lg = series_log(series_exp(t(3, N, 0)) * series_exp(t(3, N, 1)));
  CHECK(lg == t(3, N, 0) + t(3, N, 1) + commutator(t(3, N, 0), t(3, N, 1)) * Q(1, 2));
  // Degree 3 against the naive oracle: X + Y + [X,Y]/2 + ([X,[X,Y]] + [Y,[Y,X]])/12.
  using oracle::NaivePoly;
  auto X = NaivePoly<Q>::letter(3, 0), Y = NaivePoly<Q>::letter(3, 1);
  auto bch = X + Y + oracle::bracket(X, Y) * Q(1, 2) +
             (oracle::bracket(X, oracle::bracket(X, Y)) + oracle::bracket(Y, oracle::bracket(Y, X))) * Q(1, 12);
  auto lg3 = series_log(series_exp(t(3, 3, 0)) * series_exp(t(3, 3, 1)));
  CHECK(oracle::from_series(lg3) == bch);
}

TEST_CASE("exp and log agree with the naive oracle") {
  std::mt19937 rng(kSeed + 1);
  for (int i = 0; i < 20; ++i) {
    auto x = rand_series(rng, 4, 4, Q(0), true);
    auto nx = oracle::from_series(x);
    CHECK(oracle::from_series(series_exp(x)) == oracle::naive_exp(nx));
    auto g = one(4, 4) + x;
    CHECK(oracle::from_series(series_log(g)) == oracle::naive_log(oracle::from_series(g)));
  }
}

TEST_CASE("inverse") {
  CHECK(series_inverse(one(3, 3)) == one(3, 3));
  auto x = t(3, 3, 0);
  CHECK(series_inverse(one(3, 3) + x) == one(3, 3) - x + x * x - x * x * x);
  CHECK(series_inverse(series_exp(x)) == series_exp(-x));
  CHECK_THROWS_AS(series_inverse(x), std::domain_error);
  auto g = SQ::scalar(3, 3, Q(2)) + t(3, 3, 1);
  CHECK(g * series_inverse(g) == one(3, 3));
}

TEST_CASE("coproduct") {
  int m = 3, N = 3;
  auto d1 = coproduct(one(m, N));
  CHECK(d1.entries().size() == 1);
  CHECK(d1.coeff({}, 0, {}, 0) == 1);
  auto d = coproduct(t(m, N, 0) * t(m, N, 1));
  CHECK(d.entries().size() == 4);
  CHECK(d.coeff({0, 1}, 0, {}, 0) == 1);
  CHECK(d.coeff({0}, 0, {1}, 0) == 1);
  CHECK(d.coeff({1}, 0, {0}, 0) == 1);
  CHECK(d.coeff({}, 0, {0, 1}, 0) == 1);
  auto e = series_exp(t(m, N, 0));
  auto diff = coproduct(e);
  diff -= Tensor<Q>::outer(e, e);
  CHECK(diff.max_abs() == 0.0);
  auto dT = coproduct(SQ::t_central(m, N));
  CHECK(dT.coeff({}, 1, {}, 0) == 1);
  CHECK(dT.coeff({}, 0, {}, 1) == 1);
}

TEST_CASE("grouplike and primitive") {
  CHECK(is_grouplike(one(3, 2)));
  CHECK_FALSE(is_grouplike(one(3, 2) + t(3, 2, 0) * t(3, 2, 1)));
  CHECK(is_primitive(commutator(t(3, 3, 0), t(3, 3, 1))));
  CHECK_FALSE(is_primitive(t(3, 3, 0) * t(3, 3, 1)));
  CHECK(is_primitive(SQ::t_central(3, 3)));
  CHECK_FALSE(is_grouplike(SQ::scalar(3, 2, Q(2))));
}

TEST_CASE("Lyndon words match the necklace count") {
  for (int g = 1; g <= 4; ++g)
    for (int n = 1; n <= 6; ++n) {
      CHECK(lyndon_words(g, n).size() == static_cast<std::size_t>(oracle::witt(g, n)));
      CHECK(witt_number(g, n) == static_cast<std::size_t>(oracle::witt(g, n)));
    }
  CHECK(lyndon_words(2, 1) == std::vector<Word>{{0}, {1}});
  CHECK(lyndon_words(2, 2) == std::vector<Word>{{0, 1}});
  CHECK(lyndon_words(2, 5).size() == 6);
}

TEST_CASE("Lyndon basis is primitive and independent") {
  for (int m : {3, 4}) {
    for (int n = 1; n <= 4; ++n) {
      auto basis = lyndon_basis<Q>(m - 1, n);
      Matrix<Q> A;
      const auto& L = *Layout::get(m - 1, n);
      for (const auto& b : basis) {
        CHECK(is_primitive(b.bracket));
        std::vector<Q> row(L.size());
        for (const auto& term : b.bracket.terms()) row[L.index(term.key)] = term.coeff;
        A.push_back(row);
      }
      CHECK(matrix_rank(A) == static_cast<int>(basis.size()));
    }
  }
  auto b = lyndon_bracket<Q>(3, 3, {0, 0, 1});
  CHECK(b == commutator(t(3, 3, 0), commutator(t(3, 3, 0), t(3, 3, 1))));
}

TEST_CASE("Lie coordinates invert the basis expansion") {
  std::mt19937 rng(kSeed + 2);
  for (int i = 0; i < 10; ++i) {
    auto x = rand_lie(rng, 4, 3).degree_part(3).with_truncation(3);
    auto c = lie_coordinates(x, 3);
    CHECK(from_lie_coordinates<Q>(4, 3, 3, c) == x);
  }
  CHECK_THROWS(lie_coordinates(t(3, 2, 0) * t(3, 2, 1), 2));
}

TEST_CASE("substitution") {
  int m = 3, N = 3;
  auto g = t(m, N, 0) * t(m, N, 1);
  auto T = SQ::t_central(m, N);
  CHECK(substitute(g, {t(m, N, 0), t(m, N, 1)}, T) == g);
  CHECK(substitute(g, {t(m, N, 1), t(m, N, 0)}, T) == t(m, N, 1) * t(m, N, 0));
  auto b = commutator(t(m, N, 0), t(m, N, 1));
  CHECK(substitute(b, {t(m, N, 2), t(m, N, 0)}, T) == b);
  CHECK_THROWS_AS(substitute(g, {one(m, N), t(m, N, 0)}, T), std::invalid_argument);
}

TEST_CASE("complex mode prunes and compares with tolerance") {
  auto z = SC::gen(3, 2, 0) * Complex(1e-20) + SC::gen(3, 2, 1);
  CHECK(z.size() == 1);
  auto a = SC::one(3, 2), b = SC::one(3, 2) + SC::gen(3, 2, 0) * Complex(1e-9);
  CHECK(approx_equal(a, b, 1e-8));
  CHECK_FALSE(approx_equal(a, b, 1e-10));
  auto q = to_complex(SQ::gen(3, 2, 0) * Q(1, 2));
  CHECK(q.coeff({0}) == Complex(0.5));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("-3/6") == Q(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
