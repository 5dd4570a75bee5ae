#pragma once

// Randomized property suites shared by the property test and the acceptance runner.

#include <functional>
#include <sstream>
#include <string>

#include "assoc_lab/construct.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace props {

using namespace testutil;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
};

inline SuiteResult run_cases(const std::string& name, int cases, const std::function<std::string(int)>& one) {
  SuiteResult r{name};
  for (int i = 0; i < cases; ++i) {
    std::string why = one(i);
    ++r.cases;
    if (!why.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + why;
    }
  }
  return r;
}

inline int rand_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline WElem rand_w(std::mt19937& rng, int m) { return {rand_int(rng, 0, 1), rand_int(rng, 0, m - 1)}; }

inline FlatElem<Q> rand_flat(std::mt19937& rng, int m, int N) {
  FlatElem<Q> x(m, N);
  int parts = rand_int(rng, 1, 3);
  for (int p = 0; p < parts; ++p) x.add(rand_w(rng, m), rand_series(rng, m, N, rand_q(rng), false, 4));
  return x;
}

inline bool tensor_equal(Tensor<Q> a, const Tensor<Q>& b) {
  a -= b;
  return a.max_abs() == 0.0;
}

inline SuiteResult exp_log_roundtrip(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("exp/log round trip", cases, [&](int) -> std::string {
    int m = rand_int(rng, 3, 5), N = rand_int(rng, 2, 4);
    auto x = rand_series(rng, m, N, Q(0), false, 6);
    if (series_log(series_exp(x)) != x) return "log(exp x) != x";
    auto g = SQ::one(m, N) + rand_series(rng, m, N, Q(0), false, 6);
    if (series_exp(series_log(g)) != g) return "exp(log g) != g";
    return {};
  });
}

inline SuiteResult coproduct_multiplicative(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("coproduct multiplicativity", cases, [&](int) -> std::string {
    int m = rand_int(rng, 3, 4), N = rand_int(rng, 2, 4);
    auto a = rand_series(rng, m, N, rand_q(rng), false, 4), b = rand_series(rng, m, N, rand_q(rng), false, 4);
    if (!tensor_equal(coproduct(a * b), coproduct(a).mul(coproduct(b)))) return "D(ab) != D(a)D(b)";
    return {};
  });
}

inline SuiteResult grouplike_iff_primitive_log(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("grouplike iff primitive log", cases, [&](int i) -> std::string {
    int m = rand_int(rng, 3, 5), N = rand_int(rng, 2, 4);
    auto g = series_exp(rand_lie(rng, m, N, true));
    // Every other case adds a non-Lie word of degree >= 2.
    if (i % 2 == 1) {
      Word w;
      int L = rand_int(rng, 2, N);
      for (int k = 0; k < L; ++k) w.push_back(rand_int(rng, 0, m - 2));
      g += SQ::monomial(m, N, w, 0, rand_nonzero_q(rng));
    }
    bool gl = is_grouplike(g), pr = is_primitive(series_log(g));
    if (gl != pr) return "grouplike and primitive-log disagree";
    if (i % 2 == 0 && !gl) return "exp of a Lie element is not grouplike";
    return {};
  });
}

inline SuiteResult w_action_automorphism(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("W action automorphism and conjugation", cases, [&](int) -> std::string {
    int m = rand_int(rng, 3, 7), N = rand_int(rng, 2, 3);
    auto g = rand_w(rng, m), h = rand_w(rng, m);
    auto a = rand_series(rng, m, N, rand_q(rng)), b = rand_series(rng, m, N, rand_q(rng));
    if (w_act_series(g, a * b) != w_act_series(g, a) * w_act_series(g, b)) return "g.(ab) != (g.a)(g.b)";
    if (w_act_series(w_mul(m, g, h), a) != w_act_series(g, w_act_series(h, a))) return "(gh).a != g.(h.a)";
    auto G = FlatElem<Q>::single(g, SQ::one(m, N)), Gi = FlatElem<Q>::single(w_inv(m, g), SQ::one(m, N));
    auto conj = G * FlatElem<Q>::single(w_identity(), a) * Gi;
    if (distance(conj, FlatElem<Q>::single(w_identity(), w_act_series(g, a))) != 0.0) return "conjugation != action";
    return {};
  });
}

inline SuiteResult j_equivariance(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("J equivariance", cases, [&](int) -> std::string {
    int m = rand_int(rng, 3, 7), N = rand_int(rng, 2, 3);
    auto g = rand_w(rng, m);
    auto a = rand_series(rng, m, N, rand_q(rng)), b = rand_series(rng, m, N, rand_q(rng));
    if (j_act_series(a * b) != j_act_series(a) * j_act_series(b)) return "J(ab) != J(a)J(b)";
    if (j_act_series(w_act_series(g, a)) != w_act_series(j_act_w(m, g), j_act_series(a))) return "J(g.a) != J(g).J(a)";
    if (j_act_series(j_act_series(a)) != a) return "J is not an involution";
    if (j_act_w(m, j_act_w(m, g)) != g) return "J on W is not an involution";
    return {};
  });
}

inline SuiteResult flat_associativity(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  return run_cases("flat associativity", cases, [&](int) -> std::string {
    int m = rand_int(rng, 3, 6), N = rand_int(rng, 2, 3);
    auto x = rand_flat(rng, m, N), y = rand_flat(rng, m, N), z = rand_flat(rng, m, N);
    if (distance((x * y) * z, x * (y * z)) != 0.0) return "(xy)z != x(yz)";
    return {};
  });
}

// Exact associators used as base points for the closure suites.
inline const std::vector<AssociatorCandidate<Q>>& base_associators() {
  static const std::vector<AssociatorCandidate<Q>> v = [] {
    std::vector<AssociatorCandidate<Q>> out;
    out.push_back(build_rational(3, Q(1), 4).candidate);
    out.push_back(build_rational(4, Q(1), 3).candidate);
    out.push_back(build_rational(5, Q(1), 3).candidate);
    out.push_back(build_rational(6, Q(1), 3).candidate);
    return out;
  }();
  return v;
}

inline std::string suite_failure(const AssociatorCandidate<Q>& c, bool with_duality = true) {
  for (const auto& r : check_suite(c, 0.0, with_duality))
    if (!r.pass) {
      std::ostringstream os;
      os << "m = " << c.m << ": " << r.equation << " fails at degree " << r.first_bad_degree.value_or(-1);
      return os.str();
    }
  return {};
}

inline SuiteResult twist_closure(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  const auto& base = base_associators();
  return run_cases("twist closure", cases, [&](int i) -> std::string {
    const auto& c = base[i % base.size()];
    return suite_failure(twist(c, rand_q(rng)));
  });
}

inline SuiteResult right_twist_closure(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  const auto& base = base_associators();
  return run_cases("right twist closure (even m)", cases, [&](int i) -> std::string {
    const auto& c = base[1 + 2 * (i % 2)];
    // Membership in the plain even-m set; the right twist does not commute with J.
    return suite_failure(right_twist(c, rand_q(rng)), false);
  });
}

inline SuiteResult scale_closure(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  const auto& base = base_associators();
  return run_cases("scale closure (single factor)", cases, [&](int i) -> std::string {
    const auto& c = base[i % base.size()];
    Q mu = rand_nonzero_q(rng);
    auto d = scale(c, mu);
    if (d.lambda != c.lambda * mu) return "lambda not rescaled";
    return suite_failure(d);
  });
}

// Pair factors (α, β) for even m; pairs with α = β occur about a third of the time.
inline std::pair<Q, Q> rand_pair(std::mt19937& rng) {
  Q a = rand_nonzero_q(rng);
  Q b = rand_int(rng, 0, 2) == 0 ? a : rand_nonzero_q(rng);
  return {a, b};
}

inline SuiteResult pair_scale_closure(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  const auto& base = base_associators();
  return run_cases("scale closure (parity pair, even m)", cases, [&](int i) -> std::string {
    const auto& c = base[1 + 2 * (i % 2)];
    auto [a, b] = rand_pair(rng);
    return suite_failure(scale_pair(c, a, b));
  });
}

inline SuiteResult hexagon_equivalence(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  auto exact = build_rational(3, Q(1), 3).candidate;
  return run_cases("m = 3 hexagon equivalence", cases, [&](int i) -> std::string {
    SQ phi;
    Q lambda(1);
    switch (i % 3) {
      case 0: phi = series_exp(rand_lie(rng, 3, 3)); break;
      case 1: phi = twist(exact, rand_q(rng)).phi; break;
      default: {
        // Rescaled associator, sometimes perturbed in degree 3.
        Q mu = rand_nonzero_q(rng);
        auto d = scale(exact, mu);
        phi = d.phi;
        lambda = d.lambda;
        if (rand_int(rng, 0, 1)) phi = phi * series_exp(rand_lie(rng, 3, 3).degree_part(3).with_truncation(3));
      }
    }
    bool ours = check_demi_tour(make_candidate(3, lambda, phi), 0.0);
    bool theirs = oracle::hexagon_residual(oracle::from_series(phi), lambda).c.empty();
    if (ours != theirs) return "demi-tour and hexagon disagree";
    return {};
  });
}

inline std::vector<SuiteResult> all_suites(unsigned seed, int cases) {
  return {exp_log_roundtrip(seed, cases),        coproduct_multiplicative(seed + 1, cases),
          grouplike_iff_primitive_log(seed + 2, cases), w_action_automorphism(seed + 3, cases),
          j_equivariance(seed + 4, cases),        flat_associativity(seed + 5, cases),
          twist_closure(seed + 6, cases),         right_twist_closure(seed + 7, cases),
          scale_closure(seed + 8, cases),         pair_scale_closure(seed + 9, cases),
          hexagon_equivalence(seed + 10, cases)};
}

}  // namespace props
