#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gassmann/linalg/matrix.hpp"

namespace gassmann {

/// Reduced row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (a(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    const Rational inv = 1 / a(r, j);
    for (auto& x : a.row(r)) x *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, j) == 0) continue;
      const Rational f = a(i, j);
      for (std::size_t k = j; k < a.cols(); ++k)
        if (a(r, k) != 0) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix a) { return rref_in_place(a).size(); }

/// Rows form a basis of {v : a * v = 0}.
inline RatMatrix nullspace(RatMatrix a) {
  const std::size_t n = a.cols();
  auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  RatMatrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.append_row(v);
  }
  return basis;
}

inline Rational determinant(RatMatrix a) {
  detail::require_input(a.rows() == a.cols(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j; i < n; ++i)
      if (a(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != j) {
      a.swap_rows(piv, j);
      det = -det;
    }
    det *= a(j, j);
    const Rational inv = 1 / a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a(i, j) == 0) continue;
      const Rational f = a(i, j) * inv;
      for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
    }
  }
  return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  detail::require_input(a.rows() == a.cols(), "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace gassmann
