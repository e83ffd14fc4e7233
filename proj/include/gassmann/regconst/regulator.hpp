#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gassmann/burnside.hpp"
#include "gassmann/error.hpp"
#include "gassmann/linalg/rational.hpp"
#include "gassmann/regconst/rep.hpp"
#include "gassmann/regconst/square_class.hpp"

namespace gassmann {

/// Rows form a basis of the vectors fixed by every generator of U.
template <GroupModel M>
RatMatrix fixed_space(const RationalRep<M>& rep, const Subgroup<M>& u) {
  const std::size_t n = rep.dim();
  RatMatrix stacked(0, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (const auto& g : u.generators()) {
    const RatMatrix d = rep(g) - id;
    for (std::size_t i = 0; i < n; ++i) stacked.append_row(d.row(i));
  }
  return nullspace(std::move(stacked));
}

/// Rows form a basis of the symmetric matrices S with A^T S A = S for all generator matrices A.
inline std::vector<RatMatrix> invariant_symmetric_basis(const std::vector<RatMatrix>& gens, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  RatMatrix eqs(0, slots.size());
  for (const auto& a : gens) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r; s < n; ++s) {
        // entry (r, s) of A^T E_k A - E_k, E_k the symmetric unit for slot k
        std::vector<Rational> row(slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k) {
          const auto [i, j] = slots[k];
          Rational v = a(i, r) * a(j, s);
          if (i != j) v += a(j, r) * a(i, s);
          if ((i == r && j == s) || (i == s && j == r)) v -= 1;
          row[k] = v;
        }
        eqs.append_row(row);
      }
  }
  const RatMatrix sol = nullspace(std::move(eqs));
  std::vector<RatMatrix> out;
  for (std::size_t b = 0; b < sol.rows(); ++b) {
    RatMatrix s(n, n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [i, j] = slots[k];
      s(i, j) = sol(b, k);
      s(j, i) = sol(b, k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Nondegenerate symmetric G-invariant form. Orthogonal representations get
/// the identity unless force_random is set; otherwise a random combination
/// of the invariant symmetric forms with small integer weights.
template <GroupModel M>
RatMatrix invariant_pairing(const RationalRep<M>& rep, std::uint64_t seed = 0, bool force_random = false) {
  const std::size_t n = rep.dim();
  if (rep.is_orthogonal() && !force_random) return RatMatrix::identity(n);
  const auto basis = invariant_symmetric_basis(rep.generator_matrices(), n);
  detail::require_internal(!basis.empty() || n == 0, "no invariant symmetric form exists");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMatrix s(n, n);
    for (const auto& b : basis) s = s + Rational(coeff(rng)) * b;
    if (determinant(s) != 0) return s;
  }
  throw InternalError("no nondegenerate invariant pairing found");
}

struct RegulatorTerm {
  std::string subgroup;
  std::int64_t coeff = 0;
  std::size_t fixed_dim = 0;
  Rational gram_det = 1;
};

struct RegulatorConstant {
  Rational value = 1;
  SquareClass square_class;
  std::vector<RegulatorTerm> terms;
};

/// C_Theta(rho) = prod_j det((1/|U_j|) <,> on rho^{U_j})^{n_j}.
template <GroupModel M>
RegulatorConstant regulator_constant(const BurnsideRelation<M>& rel, const RationalRep<M>& rep,
                                     const std::optional<RatMatrix>& pairing = std::nullopt) {
  detail::require_input(rel.group().order() == rep.group().order() && rel.group().kind() == rep.group().kind(),
                        "relation and representation live on different groups");
  const RatMatrix form = pairing ? *pairing : invariant_pairing(rep);
  detail::require_input(form.rows() == rep.dim() && form.cols() == rep.dim(), "pairing has the wrong size");
  RegulatorConstant out;
  for (const auto& t : rel.terms()) {
    const RatMatrix v = fixed_space(rep, t.subgroup);
    RegulatorTerm term{t.subgroup.name(), t.coeff, v.rows(), 1};
    if (v.rows() > 0) {
      RatMatrix gram = v * form * v.transpose();
      const Rational scale(mpz_class(1), mpz_class(static_cast<unsigned long>(t.subgroup.order())));
      term.gram_det = determinant(scale * gram);
    }
    if (term.gram_det == 0) throw InternalError("degenerate Gram matrix on fixed space of " + t.subgroup.name());
    const long e = t.coeff < 0 ? -t.coeff : t.coeff;
    for (long i = 0; i < e; ++i) {
      if (t.coeff > 0) out.value *= term.gram_det;
      else out.value /= term.gram_det;
    }
    out.terms.push_back(std::move(term));
  }
  out.value.canonicalize();
  out.square_class = SquareClass::of(out.value);
  return out;
}

}  // namespace gassmann
