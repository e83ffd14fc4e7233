#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gassmann/linalg/matrix.hpp"

namespace gassmann {

namespace detail {

// q = round(a / b), so |a - q*b| <= |b|/2. The floor remainder has the
// sign of b, so rounding up is always q + 1.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (cmp_abs(Integer(2 * r), b) > 0) q += 1;
  return q;
}

}  // namespace detail

/// Row echelon form E = U * A over Z with U unimodular.
struct IntegerEchelon {
  IntMatrix echelon;
  std::optional<IntMatrix> transform;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i, i < rank
  [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

inline void row_axpy(IntMatrix& a, std::size_t dst, const Integer& q, std::size_t src, std::size_t from_col) {
  auto d = a.row(dst);
  auto s = a.row(src);
  for (std::size_t k = from_col; k < d.size(); ++k)
    if (s[k] != 0) mpz_submul(d[k].get_mpz_t(), q.get_mpz_t(), s[k].get_mpz_t());
}

}  // namespace detail

/// Hermite-style row echelon form: pivots positive, entries above each pivot
/// reduced into [0, pivot).
inline IntegerEchelon integer_echelon(IntMatrix a, bool with_transform = false) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::optional<IntMatrix> u;
  if (with_transform) u = IntMatrix::identity(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Integer q;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    for (;;) {
      // smallest nonzero magnitude in column j at or below row r
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, j) != 0 && (best == rows || cmp_abs(a(i, j), a(best, j)) < 0)) best = i;
      if (best == rows) break;
      a.swap_rows(r, best);
      if (u) u->swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        q = detail::nearest_quotient(a(i, j), a(r, j));
        detail::row_axpy(a, i, q, r, j);
        if (u) detail::row_axpy(*u, i, q, r, 0);
        if (a(i, j) != 0) clean = false;
      }
      if (clean) {
        if (sgn(a(r, j)) < 0) {
          for (auto& x : a.row(r)) x = -x;
          if (u)
            for (auto& x : u->row(r)) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
          if (a(i, j) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(r, j).get_mpz_t());
          if (q == 0) continue;
          detail::row_axpy(a, i, q, r, j);
          if (u) detail::row_axpy(*u, i, q, r, 0);
        }
        pivots.push_back(j);
        ++r;
        break;
      }
    }
  }
  return {std::move(a), std::move(u), std::move(pivots)};
}

}  // namespace gassmann
