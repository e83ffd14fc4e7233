#pragma once

// Named rational representations of the built-in groups.

#include <string>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/catalog.hpp"
#include "gassmann/number_theory.hpp"
#include "gassmann/regconst/rep.hpp"

namespace gassmann {

/// chi o det, chi the quadratic character of F_p^x.
inline RationalRep<Gl2Model> gl2_det_character(const FiniteGroup<Gl2Model>& g) {
  const auto& m = g.model();
  return character_rep<Gl2Model>(
      g, [m](const Mat2& x) { return Rational(nt::legendre(m.det(x), m.p())); }, "chi_det");
}

/// I = Ind_B^G r_{chi,triv}, r([[a,b],[0,d]]) = chi(a); the (p+1)-dimensional
/// principal series attached to the quadratic character.
inline RationalRep<Gl2Model> gl2_principal_sign_rep(const FiniteGroup<Gl2Model>& g) {
  const auto b = gl2_subgroup(g, "B");
  std::vector<int> signs;
  for (const auto& x : b.generators()) signs.push_back(nt::legendre(x.a(), g.model().p()));
  return induced_sign_rep(g, b, signs, "I");
}

/// I = Ind_H^G psi with H = <T_{3,0}, T_{5,0}, T_{1,4}> of order 8 and
/// psi(T_{1,4}) = -1, psi trivial on U1. Rational model of the induction of a
/// faithful character of the translations (characters agree; tested).
inline RationalRep<AffineModel> affine_principal_rep(const FiniteGroup<AffineModel>& g) {
  const auto& m = g.model();
  const auto h = subgroup_closure(g, {m.make(3, 0), m.make(5, 0), m.make(1, 4)}, "H");
  return induced_sign_rep(g, h, {1, 1, -1}, "I");
}

/// The 8 linear characters, indexed by bits (s, t, u):
/// T_{a,b} -> chi_4(a)^s chi_8(a)^t (-1)^(u b), with chi_4(a) = -1 iff a = 3 mod 4
/// and chi_8(a) = -1 iff a = +-3 mod 8.
inline RationalRep<AffineModel> affine_linear_character(const FiniteGroup<AffineModel>& g, unsigned index) {
  detail::require_input(index < 8, "affine linear character index must be below 8");
  const bool s = index & 1u, t = index & 2u, u = index & 4u;
  return character_rep<AffineModel>(
      g,
      [s, t, u](const Affine& x) {
        int v = 1;
        if (s && x.a % 4 == 3) v = -v;
        if (t && (x.a == 3 || x.a == 5)) v = -v;
        if (u && x.b % 2 == 1) v = -v;
        return Rational(v);
      },
      "lin" + std::to_string(index));
}

/// Two-dimensional representations on Q(i) = Q^2:
/// T_{a,b} v = eps(a) i^b sigma_a(v), sigma_a complex conjugation iff a = 3 mod 4.
/// twist 0: eps = 1; twist 1: eps(a) = -1 iff a in {5, 7}. These are the two
/// two-dimensional irreducibles; twisting by chi_4 gives nothing new.
inline RationalRep<AffineModel> affine_plane_rep(const FiniteGroup<AffineModel>& g, unsigned twist) {
  detail::require_input(twist < 2, "affine plane representation twist must be 0 or 1");
  std::vector<RatMatrix> mats;
  for (const auto& x : g.generators()) {
    // i^b on the basis (1, i), then sigma_a
    RatMatrix rot = RatMatrix::identity(2);
    const RatMatrix i_mul{{0, -1}, {1, 0}};
    for (unsigned k = 0; k < x.b % 4u; ++k) rot = i_mul * rot;
    RatMatrix sigma = RatMatrix::identity(2);
    if (x.a % 4 == 3) sigma(1, 1) = -1;
    const int eps = twist == 1 && (x.a == 5 || x.a == 7) ? -1 : 1;
    RatMatrix r = rot * sigma;
    if (eps < 0)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = -r(i, j);
    mats.push_back(r);
  }
  return rep_from_generator_matrices(g, std::move(mats), "plane" + std::to_string(twist));
}

}  // namespace gassmann
