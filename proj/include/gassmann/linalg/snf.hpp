#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <optional>
#include <vector>

#include "gassmann/linalg/echelon.hpp"
#include "gassmann/linalg/matrix.hpp"

namespace gassmann {

struct SmithForm {
  /// Nonzero diagonal entries d1 | d2 | ... | dk, all positive; k = rank.
  std::vector<Integer> factors;
  /// Unimodular L, R with L * m * R diagonal, present when requested.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

namespace detail {

class SmithReducer {
 public:
  SmithReducer(IntMatrix m, bool transforms) : a_(std::move(m)), transforms_(transforms) {
    if (transforms_) {
      left_ = IntMatrix::identity(a_.rows());
      right_ = IntMatrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      if (!move_min_to(t, t, rows, t, cols)) break;
      for (;;) {
        bool clean = clear_column(t);
        clean = clear_row(t) && clean;
        if (clean) break;
        // some remainder survived; bring the smallest entry of row/column t to the pivot
        move_min_in_cross(t);
      }
      if (sgn(a_(t, t)) < 0) negate_row(t);
    }
    std::vector<Integer> diag;
    for (std::size_t i = 0; i < t; ++i) diag.push_back(a_(i, i));
    fix_divisibility(diag);

    SmithForm out;
    out.factors = std::move(diag);
    if (transforms_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    const Integer* best = nullptr;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        if (!best || cmp_abs(x, *best) < 0) {
          best = &x;
          bi = i;
          bj = j;
          if (cmp_abs(x, 1ul) == 0) goto found;
        }
      }
    if (!best) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_min_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    const Integer* best = &a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0 && cmp_abs(a_(i, t), *best) < 0) {
        best = &a_(i, t);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0 && cmp_abs(a_(t, j), *best) < 0) {
        best = &a_(t, j);
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // Reduce column t below the pivot; returns true if it is now zero there.
  bool clear_column(std::size_t t) {
    bool clean = true;
    std::vector<std::size_t> support;
    for (std::size_t j = t; j < a_.cols(); ++j)
      if (a_(t, j) != 0) support.push_back(j);
    Integer q;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      q = nearest_quotient(a_(i, t), a_(t, t));
      for (std::size_t j : support) mpz_submul(a_(i, j).get_mpz_t(), q.get_mpz_t(), a_(t, j).get_mpz_t());
      if (transforms_) {
        auto li = left_.row(i);
        auto lt = left_.row(t);
        for (std::size_t j = 0; j < li.size(); ++j)
          if (lt[j] != 0) mpz_submul(li[j].get_mpz_t(), q.get_mpz_t(), lt[j].get_mpz_t());
      }
      if (a_(i, t) != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    std::vector<std::size_t> support;
    for (std::size_t i = t; i < a_.rows(); ++i)
      if (a_(i, t) != 0) support.push_back(i);
    Integer q;
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      q = nearest_quotient(a_(t, j), a_(t, t));
      for (std::size_t i : support) mpz_submul(a_(i, j).get_mpz_t(), q.get_mpz_t(), a_(i, t).get_mpz_t());
      if (transforms_)
        for (std::size_t i = 0; i < right_.rows(); ++i)
          if (right_(i, t) != 0) mpz_submul(right_(i, j).get_mpz_t(), q.get_mpz_t(), right_(i, t).get_mpz_t());
      if (a_(t, j) != 0) clean = false;
    }
    return clean;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (transforms_) left_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (transforms_) right_.swap_cols(a, b);
  }
  void negate_row(std::size_t t) {
    for (auto& x : a_.row(t)) x = -x;
    if (transforms_)
      for (auto& x : left_.row(t)) x = -x;
  }

  // Replace (d_i, d_j) by (gcd, lcm) until the diagonal is a divisibility chain.
  void fix_divisibility(std::vector<Integer>& d) {
    Integer g, s, u;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
        Integer ai = d[i] / g, bj = d[j] / g;
        if (transforms_) {
          // rows: [s u; -b/g a/g], cols: [1 -u*b/g; 1 s*a/g]
          auto ri = left_.row(i);
          auto rj = left_.row(j);
          for (std::size_t k = 0; k < ri.size(); ++k) {
            Integer x = ri[k], y = rj[k];
            ri[k] = s * x + u * y;
            rj[k] = -bj * x + ai * y;
          }
          Integer c01 = -u * bj, c11 = s * ai;
          for (std::size_t k = 0; k < right_.rows(); ++k) {
            Integer x = right_(k, i), y = right_(k, j);
            right_(k, i) = x + y;
            right_(k, j) = c01 * x + c11 * y;
          }
        }
        d[j] = d[i] * bj;
        d[i] = g;
      }
  }

  IntMatrix a_;
  bool transforms_;
  IntMatrix left_, right_;
};

/// Eliminates +-1 pivots (Markowitz order, to limit fill-in) and returns the
/// number eliminated together with the residual matrix. Each eliminated
/// pivot contributes an invariant factor 1; the residual carries the rest.
inline std::pair<std::size_t, IntMatrix> unit_presweep(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<bool> row_live(rows, true), col_live(cols, true);
  std::vector<std::size_t> rc(rows), cc(cols);
  std::size_t units = 0;
  Integer f;
  for (;;) {
    std::fill(rc.begin(), rc.end(), 0);
    std::fill(cc.begin(), cc.end(), 0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!row_live[i]) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (col_live[j] && sgn(a(i, j)) != 0) {
          ++rc[i];
          ++cc[j];
        }
    }
    std::size_t bi = rows, bj = cols, best = SIZE_MAX;
    for (std::size_t i = 0; i < rows && best > 0; ++i) {
      if (!row_live[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!col_live[j] || cmp_abs(a(i, j), 1ul) != 0) continue;
        const std::size_t cost = (rc[i] - 1) * (cc[j] - 1);
        if (cost < best) {
          best = cost;
          bi = i;
          bj = j;
          if (cost == 0) break;
        }
      }
    }
    if (bi == rows) break;
    // row_k -= (a_kj / a_ij) row_i; a_ij = +-1 so the quotient is a_kj * a_ij
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols; ++j)
      if (col_live[j] && j != bj && sgn(a(bi, j)) != 0) support.push_back(j);
    for (std::size_t k = 0; k < rows; ++k) {
      if (!row_live[k] || k == bi || sgn(a(k, bj)) == 0) continue;
      f = a(k, bj) * a(bi, bj);
      for (std::size_t j : support) mpz_submul(a(k, j).get_mpz_t(), f.get_mpz_t(), a(bi, j).get_mpz_t());
      a(k, bj) = 0;
    }
    row_live[bi] = false;
    col_live[bj] = false;
    ++units;
  }
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t i = 0; i < rows; ++i)
    if (row_live[i]) {
      bool nz = false;
      for (std::size_t j = 0; j < cols && !nz; ++j) nz = col_live[j] && sgn(a(i, j)) != 0;
      if (nz) keep_r.push_back(i);
    }
  for (std::size_t j = 0; j < cols; ++j)
    if (col_live[j]) {
      bool nz = false;
      for (std::size_t i : keep_r) nz = nz || sgn(a(i, j)) != 0;
      if (nz) keep_c.push_back(j);
    }
  IntMatrix rest(keep_r.size(), keep_c.size());
  for (std::size_t i = 0; i < keep_r.size(); ++i)
    for (std::size_t j = 0; j < keep_c.size(); ++j) rest(i, j) = std::move(a(keep_r[i], keep_c[j]));
  return {units, std::move(rest)};
}

struct RankProfile {
  std::size_t rank = 0;
  /// |det| of the nonsingular rank x rank minor on the pivot rows and columns.
  Integer minor_det = 1;
};

/// Fraction-free (Bareiss) elimination; the last pivot is the determinant
/// of the minor on the chosen pivot rows and columns, up to sign.
inline RankProfile bareiss_profile(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  RankProfile out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a(i, j)) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = j + 1; k < cols; ++k) {
        a(i, k) = a(i, k) * a(r, j) - a(i, j) * a(r, k);
        mpz_divexact(a(i, k).get_mpz_t(), a(i, k).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, j) = 0;
    }
    prev = a(r, j);
    ++r;
  }
  out.rank = r;
  out.minor_det = abs(prev);
  return out;
}

/// Diagonal of the Smith form of a computed over Z/N, each entry reported as
/// gcd(d_i, N) in (0, N]; min(rows, cols) entries.
inline std::vector<Integer> smith_diagonal_mod(IntMatrix a, const Integer& N) {
  const std::size_t rows = a.rows(), cols = a.cols(), n = std::min(rows, cols);
  auto reduce = [&](Integer& x) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), N.get_mpz_t());
    if (2 * x > N) x -= N;
  };
  for (std::size_t i = 0; i < rows; ++i)
    for (auto& x : a.row(i)) reduce(x);
  std::vector<Integer> out;
  Integer q;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(i, j)) != 0 && (bi == rows || cmp_abs(a(i, j), a(bi, bj)) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        out.insert(out.end(), n - t, N);
        return out;
      }
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        q = nearest_quotient(a(i, t), a(t, t));
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(t, j)) != 0) {
            mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(t, j).get_mpz_t());
            reduce(a(i, j));
          }
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        q = nearest_quotient(a(t, j), a(t, t));
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(a(i, t)) != 0) {
            mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, t).get_mpz_t());
            reduce(a(i, j));
          }
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block; otherwise fold the offending row in
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) {
        a(t, j) += a(bad, j);
        reduce(a(t, j));
      }
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a(t, t).get_mpz_t(), N.get_mpz_t());
    out.push_back(g);
  }
  return out;
}

}  // namespace detail

/// Smith normal form by min-magnitude pivoting with full row and column
/// reduction, followed by a gcd/lcm pass over the diagonal. Without
/// transforms, unit pivots are swept out first to keep entries small.
inline SmithForm smith_normal_form(IntMatrix m, bool with_transforms = false) {
  if (with_transforms) return detail::SmithReducer(std::move(m), true).run();
  // Unit pivots first. For the residual R of rank r, |det| d of a
  // nonsingular r x r minor kills the torsion of coker R, so the Smith form
  // over Z/2d shows torsion factors exactly and free summands as 2d.
  auto [units, rest] = detail::unit_presweep(std::move(m));
  SmithForm out;
  out.factors.assign(units, Integer(1));
  if (rest.empty()) return out;
  const auto profile = detail::bareiss_profile(rest);
  if (profile.rank == 0) return out;
  const Integer modulus = 2 * profile.minor_det;
  const std::size_t cols = rest.cols();
  auto diag = detail::smith_diagonal_mod(std::move(rest), modulus);
  std::size_t free = cols - diag.size();
  for (auto& d : diag) {
    if (d == modulus) ++free;
    else out.factors.push_back(std::move(d));
  }
  detail::require_internal(free == cols - profile.rank, "modular Smith form disagrees with the rank");
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

inline std::vector<Integer> invariant_factors(const IntMatrix& m) { return smith_normal_form(m).factors; }

}  // namespace gassmann
