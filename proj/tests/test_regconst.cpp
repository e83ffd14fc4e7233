#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gassmann/burnside.hpp"
#include "gassmann/group/catalog.hpp"
#include "gassmann/regconst/named_reps.hpp"
#include "gassmann/regconst/regulator.hpp"
#include "gassmann/regconst/square_class.hpp"
#include "properties.hpp"

using namespace gassmann;

namespace {

BurnsideRelation<Gl2Model> gl2_relation(const FiniteGroup<Gl2Model>& g) {
  BurnsideRelation<Gl2Model> rel(g);
  rel.add(1, gl2_subgroup(g, "U1")).add(-1, gl2_subgroup(g, "U2"));
  return rel;
}

BurnsideRelation<AffineModel> affine_relation(const FiniteGroup<AffineModel>& g) {
  BurnsideRelation<AffineModel> rel(g);
  rel.add(1, affine_subgroup(g, "U1")).add(-1, affine_subgroup(g, "U2"));
  return rel;
}

/// (1/|G|) sum chi(g)^2, which is <chi, chi> for a rational character.
template <GroupModel M>
Rational self_product(const RationalRep<M>& rep) {
  Rational s = 0;
  for (const auto& x : rep.group().elements()) s += rep.character(x) * rep.character(x);
  s /= Rational(static_cast<long>(rep.group().order()));
  return s;
}

template <GroupModel M>
bool is_invariant_form(const RationalRep<M>& rep, const RatMatrix& s) {
  if (s.transpose() != s || determinant(s) == 0) return false;
  for (const auto& x : rep.group().elements())
    if (rep(x).transpose() * s * rep(x) != s) return false;
  return true;
}

std::string sc(const Rational& x) { return squarefree_class(x).to_string(); }

}  // namespace

TEST_CASE("regulator constants do not depend on the chosen pairing", "[regconst][property]") {
  for (const auto& r : props::pairing_independence_suite()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("induction and restriction give the same constant", "[regconst][property]") {
  for (const auto& r : props::frobenius_suite()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("regulator constants of U1 - U2 in gl2(p)", "[regconst]") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto g = make_gl2(p);
    const auto rel = gl2_relation(g);
    INFO("p = " << p);
    CHECK(regulator_constant(rel, trivial_rep(g)).square_class.to_string() == "+1");
    CHECK(regulator_constant(rel, perm_rep(g, gl2_subgroup(g, "B"))).square_class.to_string() == "+1");
    CHECK(regulator_constant(rel, gl2_principal_sign_rep(g)).square_class.to_string() == "+" + std::to_string(p));
    CHECK(regulator_constant(rel, gl2_det_character(g)).square_class.to_string() == "+1");
  }
}

TEST_CASE("regulator constants of U1 - U2 in the affine group mod 8", "[regconst]") {
  const auto g = make_affine_mod8();
  const auto rel = affine_relation(g);
  const auto ci = regulator_constant(rel, affine_principal_rep(g));
  CHECK(ci.square_class.to_string() == "+2");
  CHECK(ci.value == Rational(1, 2));
  for (unsigned k = 0; k < 8; ++k) CHECK(regulator_constant(rel, affine_linear_character(g, k)).square_class.is_trivial());
  for (unsigned t = 0; t < 2; ++t) CHECK(regulator_constant(rel, affine_plane_rep(g, t)).square_class.is_trivial());
}

TEST_CASE("the triv constant of a relation matches the regulator constant", "[regconst]") {
  for (unsigned n : {3u, 5u}) {
    const auto g = make_dihedral(n);
    BurnsideRelation<DihedralModel> rel(g);
    rel.add(1, dihedral_subgroup(g, "1")).add(-2, dihedral_subgroup(g, "C2")).add(-1, dihedral_subgroup(g, "Cp")).add(2, dihedral_subgroup(g, "G"));
    const auto c = regulator_constant(rel, trivial_rep(g));
    CHECK(c.value == relation_triv_constant(rel));
    CHECK(c.value == Rational(1, static_cast<long>(n)));
  }
}

TEST_CASE("regulator constants are multiplicative over direct sums", "[regconst][property]") {
  const auto g = make_gl2(3);
  const auto rel = gl2_relation(g);
  const auto i = gl2_principal_sign_rep(g), d = gl2_det_character(g), pb = perm_rep(g, gl2_subgroup(g, "B"));
  for (const auto& [a, b] : {std::pair{i, d}, std::pair{i, pb}, std::pair{pb, d}, std::pair{i, i}}) {
    const auto sum = regulator_constant(rel, direct_sum(a, b)).square_class;
    const auto prod = regulator_constant(rel, a).square_class * regulator_constant(rel, b).square_class;
    INFO(a.name() << " + " << b.name());
    CHECK(sum == prod);
  }
  const auto ga = make_affine_mod8();
  const auto rela = affine_relation(ga);
  const auto ia = affine_principal_rep(ga), pl = affine_plane_rep(ga, 1);
  CHECK(regulator_constant(rela, direct_sum(ia, pl)).square_class ==
        regulator_constant(rela, ia).square_class * regulator_constant(rela, pl).square_class);
}

TEST_CASE("invariant pairings are symmetric, nondegenerate, and invariant", "[regconst]") {
  // C4 acting on Q^2 by quarter turns, in a skewed basis so the standard form is not invariant
  const auto g = props::cyc(4);
  const RatMatrix turn{{0, -1}, {1, 0}};
  const auto rot = rep_from_generator_matrices(g, {turn}, "rot");
  const auto skew = conjugated(rot, RatMatrix{{1, 1}, {0, 2}});
  CHECK(rot.is_orthogonal());
  CHECK_FALSE(skew.is_orthogonal());
  for (std::uint64_t seed : {0u, 3u, 17u}) {
    CHECK(is_invariant_form(rot, invariant_pairing(rot, seed, true)));
    CHECK(is_invariant_form(skew, invariant_pairing(skew, seed)));
  }
  const auto ga = make_affine_mod8();
  const auto i = conjugated(affine_principal_rep(ga), props::shear(4));
  CHECK(is_invariant_form(i, invariant_pairing(i, 5)));
}

TEST_CASE("affine representations are the expected irreducibles", "[regconst]") {
  const auto g = make_affine_mod8();
  const auto i = affine_principal_rep(g);
  CHECK(i.dim() == 4);
  CHECK(self_product(i) == 1);
  for (unsigned t = 0; t < 2; ++t) CHECK(self_product(affine_plane_rep(g, t)) == 1);
  CHECK(self_product(direct_sum(affine_plane_rep(g, 0), affine_plane_rep(g, 1))) == 2);
  // the 8 linear characters are distinct
  std::set<std::vector<Rational>> tables;
  for (unsigned k = 0; k < 8; ++k) {
    std::vector<Rational> row;
    for (const auto& x : g.elements()) row.push_back(affine_linear_character(g, k).character(x));
    tables.insert(row);
  }
  CHECK(tables.size() == 8);
  // 8 * 1 + 2 * 4 + 16 accounts for the whole group algebra
  CHECK(8 * 1 + 2 * 2 * 2 + 4 * 4 == static_cast<int>(g.order()));
  // character of the induced rep from the faithful character of the translations
  for (const auto& x : g.elements()) {
    const Rational want = x.a == 1 && x.b == 0 ? 4 : (x.a == 1 && x.b == 4 ? -4 : 0);
    INFO(g.model().format(x));
    CHECK(i.character(x) == want);
  }
}

TEST_CASE("square classes", "[regconst]") {
  CHECK(sc(12) == "+3");
  CHECK(sc(Rational(-8, 3)) == "-6");
  CHECK(sc(Rational(1, 4)) == "+1");
  CHECK(sc(Rational(50, 7)) == "+14");
  CHECK(squarefree_class(Rational(3)) * squarefree_class(Rational(6)) == squarefree_class(Rational(2)));
  CHECK(square_class_pow(squarefree_class(Rational(5)), -3) == squarefree_class(Rational(5)));
  CHECK(square_class_pow(squarefree_class(Rational(5)), 2).is_trivial());
  CHECK_THROWS_AS(squarefree_class(Rational(0)), InputError);
}

TEST_CASE("representation input errors", "[regconst]") {
  const auto g = props::cyc(4);
  // a matrix of order 3 cannot be the image of a generator of C4
  CHECK_THROWS_AS(rep_from_generator_matrices(g, {RatMatrix{{0, -1}, {1, -1}}}), InputError);
  CHECK_THROWS_AS(rep_from_generator_matrices(g, {RatMatrix{{1, 0}, {0, 0}}}), InputError);
  CHECK_THROWS_AS(rep_from_generator_matrices(g, {}), InputError);
  CHECK_NOTHROW(rep_from_generator_matrices(g, {RatMatrix{{-1}}}));
  const auto ga = make_affine_mod8();
  CHECK_THROWS_AS(affine_linear_character(ga, 8), InputError);
  CHECK_THROWS_AS(affine_plane_rep(ga, 2), InputError);
  const auto g3 = make_gl2(3);
  CHECK_THROWS_AS(regulator_constant(gl2_relation(g3), trivial_rep(make_gl2(5))), InputError);
  CHECK_THROWS_AS(conjugated(trivial_rep(g3), RatMatrix{{0}}), InputError);
}
