#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "assoc_lab/scalar.hpp"

namespace assoc_lab {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Result of reducing an augmented system [A | b] to reduced row echelon form.
template <class K>
struct RrefResult {
  std::vector<int> pivots;
  bool consistent = true;
  std::vector<K> solution;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Solves A x = b by reduced row echelon form with pivots taken in column
/// order and free variables set to zero.  Inexact fields use partial
/// pivoting with an absolute threshold.
template <class K>
RrefResult<K> solve_rref(Matrix<K> A, std::vector<K> b, double tol = 1e-12) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  RrefResult<K> res;
  std::size_t r = 0;
  auto nonzero = [&](const K& x) {
    if constexpr (Field<K>::exact)
      return !Field<K>::is_zero(x);
    else
      return Field<K>::magnitude(x) > tol;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    if constexpr (Field<K>::exact) {
      for (std::size_t i = r; i < rows; ++i)
        if (nonzero(A[i][c])) {
          p = i;
          break;
        }
    } else {
      double best = tol;
      for (std::size_t i = r; i < rows; ++i)
        if (Field<K>::magnitude(A[i][c]) > best) {
          best = Field<K>::magnitude(A[i][c]);
          p = i;
        }
    }
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    K inv = Field<K>::one() / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || !nonzero(A[i][c])) continue;
      K f = A[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!Field<K>::is_zero(A[r][j])) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    res.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (nonzero(b[i])) res.consistent = false;
  res.solution.assign(cols, Field<K>::zero());
  for (std::size_t i = 0; i < res.pivots.size(); ++i) res.solution[res.pivots[i]] = b[i];
  return res;
}

template <class K>
int matrix_rank(const Matrix<K>& A, double tol = 1e-10) {
  std::vector<K> b(A.size(), Field<K>::zero());
  return solve_rref(A, b, tol).rank();
}

}  // namespace assoc_lab
