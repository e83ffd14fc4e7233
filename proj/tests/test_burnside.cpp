#include <catch2/catch_amalgamated.hpp>

#include "gassmann/burnside.hpp"
#include "gassmann/group/catalog.hpp"
#include "gassmann/regconst/rep.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gassmann;

namespace {

/// Brute force: the permutation characters cancel at every element.
template <GroupModel M>
bool brute_force_relation(const BurnsideRelation<M>& rel) {
  for (const auto& x : rel.group().elements()) {
    long s = 0;
    for (const auto& t : rel.terms())
      s += t.coeff * static_cast<long>(oracle::fixed_cosets(rel.group(), t.subgroup, x));
    if (s != 0) return false;
  }
  return true;
}

BurnsideRelation<DihedralModel> dihedral_relation(unsigned n) {
  const auto g = make_dihedral(n);
  BurnsideRelation<DihedralModel> rel(g);
  rel.add(1, dihedral_subgroup(g, "1"))
      .add(-2, dihedral_subgroup(g, "C2"))
      .add(-1, dihedral_subgroup(g, "Cp"))
      .add(2, dihedral_subgroup(g, "G"));
  return rel;
}

BurnsideRelation<Gl2Model> gl2_relation(unsigned p) {
  const auto g = make_gl2(p);
  BurnsideRelation<Gl2Model> rel(g);
  rel.add(1, gl2_subgroup(g, "U1")).add(-1, gl2_subgroup(g, "U2"));
  return rel;
}

BurnsideRelation<AffineModel> affine_relation() {
  const auto g = make_affine_mod8();
  BurnsideRelation<AffineModel> rel(g);
  rel.add(1, affine_subgroup(g, "U1")).add(-1, affine_subgroup(g, "U2"));
  return rel;
}

}  // namespace

TEST_CASE("permutation character counts fixed cosets", "[burnside][oracle]") {
  const auto g = make_gl2(3);
  for (const char* name : {"B", "U1", "U2", "T", "Z"}) {
    const auto u = gl2_subgroup(g, name);
    const auto rep = perm_rep(g, u);
    for (const auto& x : g.elements()) CHECK(rep.character(x) == Rational(oracle::fixed_cosets(g, u, x)));
  }
  const auto a = make_affine_mod8();
  for (const char* name : {"U1", "U2", "N"}) {
    const auto u = affine_subgroup(a, name);
    const auto rep = perm_rep(a, u);
    for (const auto& x : a.elements()) CHECK(rep.character(x) == Rational(oracle::fixed_cosets(a, u, x)));
  }
}

TEST_CASE("relation validation agrees with fixed-point sums", "[burnside][oracle]") {
  for (unsigned n : {3u, 5u, 7u}) {
    const auto rel = dihedral_relation(n);
    CHECK(validate_relation(rel).is_q_relation);
    CHECK(brute_force_relation(rel));
    CHECK(validate_relation(rel).coeff_sum == 0);
  }
  for (unsigned p : {3u, 5u, 7u}) {
    const auto rel = gl2_relation(p);
    CHECK(validate_relation(rel).is_q_relation);
    CHECK(brute_force_relation(rel));
  }
  CHECK(validate_relation(affine_relation()).is_q_relation);
  CHECK(brute_force_relation(affine_relation()));

  // dihedral relation with a wrong coefficient
  const auto g = make_dihedral(5);
  BurnsideRelation<DihedralModel> bad(g);
  bad.add(1, dihedral_subgroup(g, "1")).add(-1, dihedral_subgroup(g, "C2")).add(-1, dihedral_subgroup(g, "Cp")).add(2, dihedral_subgroup(g, "G"));
  CHECK_FALSE(validate_relation(bad).is_q_relation);
  CHECK_FALSE(brute_force_relation(bad));
}

TEST_CASE("C2 has no nontrivial relation between its two subgroups", "[burnside]") {
  const auto g = props::cyc(2);
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      BurnsideRelation<PermModel> rel(g);
      rel.add(a, perm_subgroup(g, "1")).add(b, perm_subgroup(g, "G"));
      CHECK_FALSE(validate_relation(rel).is_q_relation);
      CHECK_FALSE(brute_force_relation(rel));
    }
}

TEST_CASE("Gassmann equivalence of U1 and U2", "[burnside]") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto g = make_gl2(p);
    const auto u1 = gl2_subgroup(g, "U1"), u2 = gl2_subgroup(g, "U2");
    CHECK(gassmann_check(g, u1, u2).equivalent);
    CHECK_FALSE(gassmann_check(g, u1, gl2_subgroup(g, "B")).equivalent);
    // not conjugate: U1 has no element diag(a, d) with d a non-square and a a square
    bool conj = false;
    for (const auto& x : g.elements()) {
      std::set<Mat2> c;
      for (const auto& h : u1.elements()) c.insert(g.mul(g.mul(g.model().inv(x), h), x));
      if (c == std::set<Mat2>(u2.elements().begin(), u2.elements().end())) conj = true;
    }
    CHECK_FALSE(conj);
  }
  const auto a = make_affine_mod8();
  CHECK(gassmann_check(a, affine_subgroup(a, "U1"), affine_subgroup(a, "U2")).equivalent);
}

TEST_CASE("Mackey restriction to rotations collapses the dihedral relation", "[burnside]") {
  for (unsigned n : {3u, 5u}) {
    const auto rel = dihedral_relation(n);
    const auto cp = dihedral_subgroup(rel.group(), "Cp");
    const auto res = mackey_restrict(rel, cp);
    CHECK(res.group().order() == n);
    std::map<std::uint64_t, long> by_order;
    for (const auto& t : res.terms()) by_order[t.subgroup.order()] += t.coeff;
    for (const auto& [order, c] : by_order) CHECK(c == 0);
    CHECK(validate_relation(res).is_q_relation);
  }
}

TEST_CASE("Mackey restriction of the gl2 relation to B is a relation", "[burnside]") {
  for (unsigned p : {3u, 5u}) {
    const auto rel = gl2_relation(p);
    const auto b = gl2_subgroup(rel.group(), "B");
    const auto res = mackey_restrict(rel, b);
    std::size_t cosets = 0;
    for (const auto& t : res.terms())
      if (t.coeff > 0) cosets += b.order() / t.subgroup.order();
    CHECK(cosets == rel.group().order() / rel.terms()[0].subgroup.order());
    CHECK(validate_relation(res).is_q_relation);
    CHECK(brute_force_relation(res));
  }
}

TEST_CASE("triv constant of the dihedral relation is 1/p", "[burnside]") {
  CHECK(relation_triv_constant(dihedral_relation(3)) == Rational(1, 3));
  CHECK(relation_triv_constant(dihedral_relation(5)) == Rational(1, 5));
  CHECK(relation_triv_constant(gl2_relation(5)) == 1);
}

TEST_CASE("relations reject non-subgroups", "[burnside]") {
  const auto g = make_dihedral(3);
  const auto big = make_dihedral(4);
  BurnsideRelation<DihedralModel> rel(g);
  CHECK_THROWS_AS(rel.add(1, dihedral_subgroup(big, "Cp")), InputError);
  CHECK(rel.to_string() == "0");
  CHECK(dihedral_relation(3).to_string() == "1 - 2*C2 - Cp + 2*G");
}
