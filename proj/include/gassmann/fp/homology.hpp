#pragma once

// H_1 of X/U, where X is the cover of the presentation 2-complex with group
// h^-1(U). The 1-skeleton of the cover has vertices U\G and edges (coset d,
// generator j) from d to d.h(x_j); each relator lifts to one 2-cell per
// coset. H_1 of a 2-complex depends only on its 2-skeleton, so the result
// is the abelianization of h^-1(U) whether or not the presentation is
// aspherical.
//
// Chains are row vectors: row (j*m + d) of d1 is the boundary of edge (d, j),
// row (i*m + c) of d2 the boundary of relator i lifted at coset c.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gassmann/abelian.hpp"
#include "gassmann/error.hpp"
#include "gassmann/fp/hom.hpp"
#include "gassmann/group/cosets.hpp"
#include "gassmann/linalg/lattice.hpp"
#include "gassmann/linalg/modular.hpp"

namespace gassmann {

struct BoundaryMatrices {
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::size_t cosets = 0;
  IntMatrix d2;  // (relators*cosets) x (generators*cosets)
  IntMatrix d1;  // (generators*cosets) x cosets
};

/// Coset action of each presentation generator, c -> c.h(x_j), and its inverse.
template <GroupModel M>
void generator_coset_actions(const GroupHom<M>& h, const CosetTable<M>& table,
                             std::vector<std::vector<std::uint32_t>>& fwd,
                             std::vector<std::vector<std::uint32_t>>& bwd) {
  const std::size_t m = table.size();
  fwd.clear();
  bwd.clear();
  for (const auto& x : h.images()) {
    auto f = table.permutation(x);
    std::vector<std::uint32_t> b(m);
    for (std::size_t c = 0; c < m; ++c) b[f[c]] = static_cast<std::uint32_t>(c);
    fwd.push_back(std::move(f));
    bwd.push_back(std::move(b));
  }
}

template <GroupModel M>
BoundaryMatrices boundary_matrices(const GroupHom<M>& h, const CosetTable<M>& table) {
  const auto& pres = h.presentation();
  const std::size_t n = pres.generator_count(), r = pres.relator_count(), m = table.size();
  std::vector<std::vector<std::uint32_t>> fwd, bwd;
  generator_coset_actions(h, table, fwd, bwd);

  BoundaryMatrices out{n, r, m, IntMatrix(r * m, n * m), IntMatrix(n * m, m)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t d = 0; d < m; ++d) {
      out.d1(j * m + d, fwd[j][d]) += 1;
      out.d1(j * m + d, d) -= 1;
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t d = c;
      auto row = out.d2.row(i * m + c);
      for (const auto& l : pres.relators()[i].letters()) {
        if (l.exp > 0) {
          row[l.gen * m + d] += 1;
          d = fwd[l.gen][d];
        } else {
          d = bwd[l.gen][d];
          row[l.gen * m + d] -= 1;
        }
      }
      detail::require_internal(d == c, "lifted relator is not closed");
    }
  detail::require_internal((out.d2 * out.d1).is_zero(), "boundary maps do not compose to zero");
  return out;
}

template <GroupModel M>
BoundaryMatrices boundary_matrices(const GroupHom<M>& h, const Subgroup<M>& u) {
  return boundary_matrices(h, CosetTable<M>(h.target(), u));
}

/// H_1(X/U, Z) = {v : v d1 = 0} / rowspan(d2).
inline AbelianInvariants homology_h1(const BoundaryMatrices& b, bool verify_saturation = false) {
  const IntMatrix cycles = kernel_basis_Z(b.d1.transpose());
  if (verify_saturation) detail::require_internal(is_saturated(cycles), "cycle basis is not saturated");
  return quotient_invariants(cycles, b.d2);
}

template <GroupModel M>
AbelianInvariants homology_h1(const GroupHom<M>& h, const Subgroup<M>& u, bool verify_saturation = false) {
  return homology_h1(boundary_matrices(h, u), verify_saturation);
}

/// dim H_1 over Q (characteristic 0) or F_p.
inline std::size_t homology_h1_dim(const BoundaryMatrices& b, std::int64_t characteristic) {
  const std::size_t r1 = characteristic == 0 ? rank_Q(b.d1) : rank_mod_p(b.d1, characteristic);
  const std::size_t r2 = characteristic == 0 ? rank_Q(b.d2) : rank_mod_p(b.d2, characteristic);
  return b.generators * b.cosets - r1 - r2;
}

template <GroupModel M>
std::size_t homology_h1_dim(const GroupHom<M>& h, const Subgroup<M>& u, std::int64_t characteristic) {
  return homology_h1_dim(boundary_matrices(h, u), characteristic);
}

template <GroupModel M>
std::size_t betti(const GroupHom<M>& h, const Subgroup<M>& u) {
  return homology_h1_dim(h, u, 0);
}

/// H_0 = Z^cosets / rowspan(d1); free of rank #orbits of h(Gamma) on U\G.
inline AbelianInvariants homology_h0(const BoundaryMatrices& b) {
  const auto factors = invariant_factors(b.d1);
  return AbelianInvariants::from_diagonal(b.cosets - factors.size(), factors);
}

}  // namespace gassmann
