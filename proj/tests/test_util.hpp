#pragma once

#include <random>

#include "assoc_lab/series.hpp"

namespace testutil {

using namespace assoc_lab;
using Q = Rational;
using SQ = Series<Rational>;
using SC = Series<Complex>;

constexpr unsigned kSeed = 20260214;

inline Q rand_q(std::mt19937& rng, int num = 3, int den = 3) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Q r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

inline Q rand_nonzero_q(std::mt19937& rng) {
  Q r;
  do r = rand_q(rng); while (r == 0);
  return r;
}

// Sparse random series, constant term c0, with T terms unless tfree.
inline SQ rand_series(std::mt19937& rng, int m, int N, Q c0, bool tfree = false, int nterms = 6) {
  SQ out = SQ::scalar(m, N, c0);
  std::uniform_int_distribution<int> len(1, N), letter(0, m - 2), tp(0, 1);
  for (int i = 0; i < nterms; ++i) {
    int L = len(rng);
    int tpow = tfree ? 0 : std::min(tp(rng), L);
    Word w;
    for (int k = 0; k < L - tpow; ++k) w.push_back(letter(rng));
    out += SQ::monomial(m, N, w, tpow, rand_q(rng));
  }
  return out;
}

// Random Lie element: random combination of brackets of generators.
inline SQ rand_lie(std::mt19937& rng, int m, int N, bool with_t = false) {
  SQ out(m, N);
  std::uniform_int_distribution<int> letter(0, m - 1);
  for (int i = 0; i < 3; ++i) out += SQ::gen(m, N, letter(rng)) * rand_q(rng);
  if (with_t) out += SQ::t_central(m, N) * rand_q(rng);
  for (int i = 0; i < 3; ++i) {
    auto a = SQ::gen(m, N, letter(rng));
    auto b = SQ::gen(m, N, letter(rng));
    auto c = SQ::gen(m, N, letter(rng));
    out += commutator(a, b) * rand_q(rng);
    out += commutator(commutator(a, b), c) * rand_q(rng);
  }
  return out;
}

}  // namespace testutil
