#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gassmann/abelian.hpp"
#include "gassmann/linalg/echelon.hpp"
#include "gassmann/linalg/matrix.hpp"
#include "gassmann/linalg/snf.hpp"

namespace gassmann {

/// Basis (as rows) of the saturated lattice {v in Z^n : m * v = 0}.
inline IntMatrix kernel_basis_Z(const IntMatrix& m) {
  const std::size_t n = m.cols();
  auto ech = integer_echelon(m.transpose(), /*with_transform=*/true);
  IntMatrix basis(0, n);
  for (std::size_t i = ech.rank(); i < n; ++i) basis.append_row(ech.transform->row(i));
  // echelonize the kernel itself so callers get small, triangular coordinates
  if (basis.rows() == 0) return basis;
  auto kech = integer_echelon(std::move(basis));
  return kech.echelon;
}

/// True iff the row lattice of k is primitive in Z^n (all invariant factors 1).
inline bool is_saturated(const IntMatrix& k) {
  if (k.rows() == 0) return true;
  auto f = invariant_factors(k);
  if (f.size() != k.rows()) return false;
  for (const auto& d : f)
    if (d != 1) return false;
  return true;
}

/// Coordinates y with y * basis = v for each row v of `vectors`, where `basis`
/// is in integer echelon form. Throws InternalError if some row lies outside
/// the lattice spanned by `basis`.
inline IntMatrix lattice_coordinates(const IntegerEchelon& basis, const IntMatrix& vectors) {
  const std::size_t k = basis.rank();
  IntMatrix coords(vectors.rows(), k);
  Integer q, rem;
  for (std::size_t s = 0; s < vectors.rows(); ++s) {
    std::vector<Integer> v(vectors.row(s).begin(), vectors.row(s).end());
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t c = basis.pivot_cols[i];
      if (v[c] == 0) continue;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[c].get_mpz_t(), basis.echelon(i, c).get_mpz_t());
      detail::require_internal(rem == 0, "vector is not in the lattice (non-integral coordinate)");
      coords(s, i) = q;
      auto row = basis.echelon.row(i);
      for (std::size_t t = c; t < v.size(); ++t)
        if (row[t] != 0) mpz_submul(v[t].get_mpz_t(), q.get_mpz_t(), row[t].get_mpz_t());
    }
    for (const auto& x : v) detail::require_internal(x == 0, "vector is not in the span of the lattice basis");
  }
  return coords;
}

/// Invariants of span(kernel_basis) / span(sublattice_gens).
inline AbelianInvariants quotient_invariants(const IntMatrix& kernel_basis, const IntMatrix& sublattice_gens) {
  auto ech = integer_echelon(kernel_basis);
  const std::size_t dim = ech.rank();
  detail::require_internal(dim == kernel_basis.rows(), "lattice basis rows are linearly dependent");
  if (sublattice_gens.rows() == 0) return AbelianInvariants{dim, {}};
  detail::require_internal(sublattice_gens.cols() == kernel_basis.cols(), "sublattice generators have the wrong length");
  IntMatrix coords = lattice_coordinates(ech, sublattice_gens);
  auto factors = invariant_factors(coords);
  return AbelianInvariants::from_diagonal(dim - factors.size(), factors);
}

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t rank_Q(IntMatrix a) { return detail::bareiss_profile(std::move(a)).rank; }

}  // namespace gassmann
