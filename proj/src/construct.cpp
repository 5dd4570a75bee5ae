#include "assoc_lab/construct.hpp"

#include "assoc_lab/linalg.hpp"
#include "assoc_lab/parallel.hpp"

namespace assoc_lab {

namespace {

using Q = Rational;

struct Unknown {
  int degree;
  const Series<Q>* bracket;
};

// Coefficients of the stacked residuals in degrees lo..n, one entry per word.
std::vector<Q> residual_rows(int m, const Q& lambda, const Series<Q>& phi, int lo, int n, bool with_duality) {
  auto c = make_candidate(m, lambda, phi);
  const Layout& L = phi.layout();
  std::vector<Q> rows;
  auto append = [&](const Series<Q>& res) {
    for (int d = lo; d <= n; ++d) {
      std::vector<Q> block(L.power(d));
      for (const auto& t : res.terms())
        if (t.key.deg == d) {
          if (t.key.tpow != 0) throw std::logic_error("T appeared in an associator residual");
          block[t.key.code] = t.coeff;
        }
      rows.insert(rows.end(), block.begin(), block.end());
    }
  };
  if (with_duality) append(duality_residual(c));
  append(demi_tour_residual(c));
  return rows;
}

struct WindowResult {
  std::vector<Series<Q>> corrections;  // degrees lo..n
  std::vector<Q> coordinates;
  DegreeDiagnostics diagnostics;
};

// Solves for the Lie pieces of degrees lo..n at once, the pieces below lo
// being fixed.  With 2·lo > n every residual coefficient up to degree n is
// affine in the unknowns, so the system is linear.
WindowResult solve_window(int m, const Q& lambda, const std::vector<Series<Q>>& fixed, int lo, int n,
                          bool with_duality) {
  if (lo < 1 || lo > n || (lo < n && 2 * lo <= n)) throw std::invalid_argument("window is not linear");
  std::vector<std::vector<LyndonElement<Q>>> bases;
  std::vector<Unknown> unknowns;
  for (int k = lo; k <= n; ++k) bases.push_back(lyndon_basis<Q>(m - 1, k));
  std::vector<std::vector<Series<Q>>> lifted(bases.size());
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (const auto& e : bases[b]) lifted[b].push_back(e.bracket.with_truncation(n));
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (const auto& s : lifted[b]) unknowns.push_back({lo + static_cast<int>(b), &s});

  Series<Q> prefix = Series<Q>::one(m, n);
  for (int k = 1; k < lo; ++k) prefix = prefix * series_exp(fixed[k - 1].with_truncation(n));
  auto base = residual_rows(m, lambda, prefix, lo, n, with_duality);

  // Each column is the exact response to one Lyndon bracket.  Unknowns of
  // degree k enter as prefix·exp(b) = prefix·(1 + b) modulo degree n+1.
  std::vector<std::vector<Q>> columns(unknowns.size());
  parallel_for(unknowns.size(), [&](std::size_t j) {
    auto shifted = residual_rows(m, lambda, prefix * (Series<Q>::one(m, n) + *unknowns[j].bracket), lo, n, with_duality);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= base[i];
    columns[j] = std::move(shifted);
  });

  Matrix<Q> A;
  std::vector<Q> rhs;
  for (std::size_t i = 0; i < base.size(); ++i) {
    bool any = sgn(base[i]) != 0;
    for (std::size_t j = 0; j < unknowns.size() && !any; ++j) any = sgn(columns[j][i]) != 0;
    if (!any) continue;
    std::vector<Q> row(unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j) row[j] = columns[j][i];
    A.push_back(std::move(row));
    rhs.push_back(-base[i]);
  }
  auto sol = solve_rref(std::move(A), std::move(rhs));

  WindowResult out;
  out.diagnostics.degree = n;
  out.diagnostics.window_start = lo;
  out.diagnostics.unknowns = static_cast<int>(unknowns.size());
  out.diagnostics.equations = static_cast<int>(base.size());
  out.diagnostics.rank = sol.rank();
  out.diagnostics.consistent = sol.consistent;
  if (!sol.consistent) return out;
  out.coordinates = sol.solution;
  std::size_t j = 0;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    int k = lo + static_cast<int>(b);
    Series<Q> piece(m, k);
    for (const auto& e : bases[b]) {
      if (sgn(sol.solution[j]) != 0) piece += e.bracket * sol.solution[j];
      ++j;
    }
    out.corrections.push_back(piece);
  }
  return out;
}

}  // namespace

DegreeStep degree_step(int m, const Q& lambda, const Series<Q>& phi_partial, int n, bool with_duality) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (phi_partial.truncation() != n) throw std::invalid_argument("partial associator must have truncation n");
  {
    auto c = make_candidate(m, lambda, phi_partial);
    auto dt = demi_tour_residual(c);
    auto du = with_duality ? duality_residual(c) : Series<Q>(m, n);
    for (int d = 0; d < n; ++d)
      if (!dt.degree_part(d).is_zero() || !du.degree_part(d).is_zero())
        throw std::invalid_argument("partial associator fails below degree " + std::to_string(n));
  }
  auto base = residual_rows(m, lambda, phi_partial, n, n, with_duality);
  auto basis = lyndon_basis<Q>(m - 1, n);
  std::vector<std::vector<Q>> columns(basis.size());
  parallel_for(basis.size(), [&](std::size_t j) {
    auto shifted = residual_rows(m, lambda, phi_partial + basis[j].bracket, n, n, with_duality);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= base[i];
    columns[j] = std::move(shifted);
  });
  Matrix<Q> A;
  std::vector<Q> rhs;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<Q> row(basis.size());
    bool any = sgn(base[i]) != 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      row[j] = columns[j][i];
      any = any || sgn(row[j]) != 0;
    }
    if (!any) continue;
    A.push_back(std::move(row));
    rhs.push_back(-base[i]);
  }
  auto sol = solve_rref(std::move(A), std::move(rhs));
  DegreeDiagnostics diag;
  diag.degree = n;
  diag.window_start = n;
  diag.unknowns = static_cast<int>(basis.size());
  diag.equations = static_cast<int>(base.size());
  diag.rank = sol.rank();
  diag.consistent = sol.consistent;
  if (!sol.consistent)
    throw InconsistentSystem("degree " + std::to_string(n) + " system is inconsistent (rank " +
                                 std::to_string(diag.rank) + ", unknowns " + std::to_string(diag.unknowns) + ")",
                             diag);
  DegreeStep step;
  step.diagnostics = diag;
  step.coordinates = sol.solution;
  step.correction = Series<Q>(m, n);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (sgn(sol.solution[j]) != 0) step.correction += basis[j].bracket * sol.solution[j];
  return step;
}

RationalBuild build_rational(int m, const Q& lambda, int N) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  if (N < 1) throw std::invalid_argument("truncation must be at least 1");
  if (sgn(lambda) == 0) throw std::invalid_argument("lambda must be nonzero");
  RationalBuild out;
  std::vector<Series<Q>> pieces;  // pieces[k-1] is the degree-k Lie element
  for (int n = 1; n <= N; ++n) {
    WindowResult w;
    int lo = n;
    for (;; --lo) {
      w = solve_window(m, lambda, pieces, lo, n, true);
      if (w.diagnostics.consistent) break;
      if (lo - 1 < 2 || 2 * (lo - 1) <= n)
        throw InconsistentSystem("degree " + std::to_string(n) + " has no solution extending degrees below " +
                                     std::to_string(lo),
                                 w.diagnostics);
    }
    pieces.resize(lo - 1);
    for (auto& p : w.corrections) pieces.push_back(std::move(p));
    // Earlier steps that were re-solved are replaced by the window result.
    out.steps.resize(lo - 1);
    for (int k = lo; k <= n; ++k) {
      DegreeStep s;
      s.correction = pieces[k - 1];
      s.coordinates = lie_coordinates(pieces[k - 1], k);
      s.diagnostics = w.diagnostics;
      out.steps.push_back(std::move(s));
    }
  }
  Series<Q> phi = Series<Q>::one(m, N);
  for (const auto& p : pieces) phi = phi * series_exp(p.with_truncation(N));
  out.candidate = make_candidate(m, lambda, phi);
  return out;
}

template <class K>
std::vector<std::vector<K>> log_lyndon_coordinates(const Series<K>& phi, double tol) {
  auto lg = series_log(phi);
  std::vector<std::vector<K>> out;
  for (int d = 1; d <= phi.truncation(); ++d) out.push_back(lie_coordinates(lg.degree_part(d).with_truncation(d), d, tol));
  return out;
}

template std::vector<std::vector<Rational>> log_lyndon_coordinates(const Series<Rational>&, double);
template std::vector<std::vector<Complex>> log_lyndon_coordinates(const Series<Complex>&, double);

}  // namespace assoc_lab
