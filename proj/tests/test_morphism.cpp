#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc_lab/construct.hpp"
#include "assoc_lab/morphism.hpp"
#include "assoc_lab/transcendental.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

BWord rand_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> letter(0, 1), e(-2, 2);
  BWord w;
  for (int i = 0; i < len; ++i) w = w.times(letter(rng) ? BWord::Sigma : BWord::Tau, e(rng));
  return w;
}

WElem w_image(int m, const BWord& w) {
  WElem g = w_identity();
  for (auto [l, e] : w.runs()) {
    WElem x = l == BWord::Sigma ? w_s() : w_omega_s(m);
    g = w_mul(m, g, w_pow(m, x, ((e % 2) + 2) % 2));
  }
  return g;
}

AssociatorCandidate<Q> rational_assoc(int m, int N) { return build_rational(m, Q(1), N).candidate; }

}  // namespace

TEST_CASE("braid words") {
  auto w = BWord::parse("s t^2 S T^-1");
  CHECK(w.runs().size() == 4);
  CHECK(w.runs()[1] == std::pair{BWord::Tau, 2});
  CHECK(w.runs()[3] == std::pair{BWord::Tau, 1});
  CHECK(w.exponent_sum() == 3);
  CHECK(BWord::parse(w.str()) == w);
  CHECK(BWord::parse("s S").runs().empty());
  CHECK(BWord::parse("sss") == BWord::sigma(3));
  CHECK(BWord::alternating(BWord::Sigma, 3) == BWord::parse("s t s"));
  CHECK((w * w.inverse()).runs().empty());
  CHECK(w.power(-1) == w.inverse());
  CHECK(BWord::sigma().conj(BWord::tau()) == BWord::parse("t s T"));
  CHECK_THROWS_AS(BWord::parse("s x"), std::invalid_argument);
  CHECK_THROWS_AS(BWord::parse("s^"), std::invalid_argument);
}

TEST_CASE("trivial associator at λ = 0") {
  auto c = make_candidate(4, Q(0), SQ::one(4, 3));
  auto M = build_morphism(c);
  CHECK(distance(M.sigma, FlatElem<Q>::single(w_s(), SQ::one(4, 3))) == 0.0);
  CHECK(distance(M.tau, FlatElem<Q>::single(w_omega_s(4), SQ::one(4, 3))) == 0.0);
  CHECK(distance(eval_word(M, BWord::parse("s S")), FlatElem<Q>::identity(4, 3)) == 0.0);
  CHECK(distance(eval_word(M, BWord()), FlatElem<Q>::identity(4, 3)) == 0.0);
}

TEST_CASE("σ̄ and the central factor") {
  auto c = rational_assoc(3, 3);
  auto M = build_morphism(c);
  auto expect = FlatElem<Q>::single(w_s(), series_exp(SQ::full_gen(3, 3, 0)));
  CHECK(distance(M.sigma, expect) == 0.0);
  CHECK(distance(M.sigma * M.sigma_inv, FlatElem<Q>::identity(3, 3)) == 0.0);
  CHECK(distance(M.tau * M.tau_inv, FlatElem<Q>::identity(3, 3)) == 0.0);
  CHECK(distance(central_exp(3, 3, Q(2)), FlatElem<Q>::single(w_identity(), series_exp(SQ::t_central(3, 3) * Q(2)))) == 0.0);
}

TEST_CASE("eval_word is multiplicative and lands on the W image") {
  std::mt19937 rng(kSeed + 7);
  auto c = rational_assoc(4, 3);
  auto M = build_morphism(c);
  for (int i = 0; i < 20; ++i) {
    auto a = rand_word(rng, 4), b = rand_word(rng, 3);
    CHECK(distance(eval_word(M, a * b), eval_word(M, a) * eval_word(M, b)) == 0.0);
    auto img = eval_word(M, a);
    REQUIRE(img.single_support());
    CHECK(img.parts().begin()->first == w_image(4, a));
  }
  for (int r = 0; r < 4; ++r) {
    auto img = eval_word(M, pure_u(4, r));
    REQUIRE(img.single_support());
    CHECK(img.parts().begin()->first == w_identity());
  }
}

TEST_CASE("Artin, O-image and centre for rational associators") {
  for (int m = 3; m <= 5; ++m) {
    auto M = build_morphism(rational_assoc(m, 3));
    for (const auto& line : verify_artin(M, 0.0)) CHECK_MESSAGE(line.pass, m << " " << line.name);
    CHECK(verify_center(M, 0.0).pass);
  }
}

TEST_CASE("Artin fails when the associator is wrong") {
  auto c = make_candidate(3, Q(1), SQ::one(3, 2));
  CHECK_THROWS_AS(build_morphism(c), std::invalid_argument);
  auto M = build_morphism(c, true, false);
  CHECK_FALSE(verify_artin(M, 0.0)[0].pass);
}

TEST_CASE("pure braid words") {
  CHECK(pure_u(4, 0) == BWord::sigma(2));
  CHECK(pure_u(4, 1) == BWord::tau(2));
  CHECK(pure_u(4, 2) == BWord::sigma(2).conj(BWord::parse("t s")));
  CHECK(pure_x(4, 1) == pure_u(4, 1));
  CHECK(pure_x(4, 2) == pure_u(4, 2) * pure_u(4, 1));
  CHECK(pure_x(4, 0) == pure_u(4, 0));
  CHECK(pure_x(4, -1) == pure_u(4, 0) * pure_u(4, 3));
}

TEST_CASE("pure braid tables") {
  for (int m = 3; m <= 6; ++m) {
    auto lines = pure_braid_tables(rational_assoc(m, m == 6 ? 2 : 3), 0.0);
    CHECK(!lines.empty());
    for (const auto& l : lines) CHECK_MESSAGE(l.pass, "m = " << m << " " << l.name);
    CHECK(lines.back().name == "u_product");
  }
}

TEST_CASE("numeric Φ₀ satisfies the Artin relation") {
  Phi0Options opt;
  opt.N = 3;
  auto res = phi0(4, opt);
  auto c = make_candidate(4, transcendental_lambda(), res.phi);
  auto M = build_morphism(c, true, true, 1e-8);
  for (const auto& line : verify_artin(M, 1e-6)) CHECK_MESSAGE(line.pass, line.name << " " << line.residual);
  CHECK(verify_center(M, 1e-6).pass);
}
