#pragma once

// Oracle-backed property suites. Each returns one PropertyResult per case so
// the acceptance binary can print a summary and the unit tests can assert
// case by case.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gassmann/burnside.hpp"
#include "gassmann/fp/homology.hpp"
#include "gassmann/group/catalog.hpp"
#include "gassmann/group/quotient.hpp"
#include "gassmann/homsearch.hpp"
#include "gassmann/regconst/named_reps.hpp"
#include "gassmann/regconst/regulator.hpp"
#include "oracles.hpp"

namespace props {

using namespace gassmann;

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<PropertyResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.passed; });
}

// ---- small groups and presentations ---------------------------------------

inline Perm perm1(std::initializer_list<int> one_based) {
  Perm p;
  for (int v : one_based) p.image.push_back(static_cast<std::uint16_t>(v - 1));
  return p;
}

inline FiniteGroup<PermModel> sym3() { return make_perm_group(3, {perm1({2, 1, 3}), perm1({2, 3, 1})}, "S3"); }
inline FiniteGroup<PermModel> sym4() { return make_perm_group(4, {perm1({2, 1, 3, 4}), perm1({2, 3, 4, 1})}, "S4"); }
inline FiniteGroup<PermModel> alt4() { return make_perm_group(4, {perm1({2, 3, 1, 4}), perm1({1, 3, 4, 2})}, "A4"); }
inline FiniteGroup<PermModel> cyc(unsigned n) {
  Perm g;
  for (unsigned i = 0; i < n; ++i) g.image.push_back(static_cast<std::uint16_t>((i + 1) % n));
  return make_perm_group(n, {g}, "C" + std::to_string(n));
}

inline std::shared_ptr<const FpPresentation> pres(std::vector<std::string> gens, std::vector<std::string> rels) {
  return std::make_shared<const FpPresentation>(FpPresentation::parse(std::move(gens), rels));
}

inline std::shared_ptr<const FpPresentation> trefoil() { return pres({"a", "b"}, {"a b a b^-1 a^-1 b^-1"}); }
inline std::shared_ptr<const FpPresentation> modular() { return pres({"a", "b"}, {"a^2", "b^3"}); }
inline std::shared_ptr<const FpPresentation> torus() { return pres({"a", "b"}, {"a b a^-1 b^-1"}); }
inline std::shared_ptr<const FpPresentation> klein() { return pres({"a", "b"}, {"a b a b^-1"}); }
inline std::shared_ptr<const FpPresentation> free2() { return pres({"a", "b"}, {}); }
inline std::shared_ptr<const FpPresentation> genus2() {
  return pres({"a", "b", "c", "d"}, {"a b a^-1 b^-1 c d c^-1 d^-1"});
}

template <GroupModel M>
Subgroup<M> sub(const FiniteGroup<M>& g, std::vector<typename M::element_type> gens, std::string name) {
  return subgroup_closure(g, std::move(gens), std::move(name));
}

/// Calls visit(name, hom, subgroups) for every small (hom, subgroup list)
/// case: targets of order <= 24, indices <= 12.
template <class Visit>
void for_each_small_case(Visit&& visit) {
  {
    const auto g = sym3();
    GroupHom<PermModel> h(trefoil(), g, {perm1({2, 1, 3}), perm1({1, 3, 2})});
    visit("trefoil onto S3", h,
          std::vector{sub(g, {}, "1"), sub(g, {perm1({2, 1, 3})}, "<(12)>"), sub(g, {perm1({2, 3, 1})}, "A3")});
  }
  {
    const auto g = sym4();
    GroupHom<PermModel> h(modular(), g, {perm1({2, 1, 3, 4}), perm1({1, 3, 4, 2})});
    visit("C2*C3 onto S4", h,
          std::vector{sub(g, {perm1({2, 1, 3, 4}), perm1({1, 3, 2, 4})}, "S3"),
                      sub(g, {perm1({2, 3, 4, 1})}, "C4"), sub(g, {perm1({2, 1, 3, 4})}, "<(12)>"),
                      sub(g, {perm1({2, 3, 1, 4}), perm1({1, 3, 4, 2})}, "A4")});
  }
  {
    const auto g = sym4();
    GroupHom<PermModel> h(pres({"a", "b", "c"}, {"a^2", "b^2", "c^2", "a b a b a b", "b c b c b c", "a c a c"}), g,
                          {perm1({2, 1, 3, 4}), perm1({1, 3, 2, 4}), perm1({1, 2, 4, 3})});
    visit("Coxeter A3 onto S4", h,
          std::vector{sub(g, {perm1({2, 1, 3, 4}), perm1({1, 3, 2, 4})}, "S3"),
                      sub(g, {perm1({2, 1, 4, 3}), perm1({3, 4, 1, 2})}, "V4"), sub(g, {perm1({2, 3, 4, 1})}, "C4")});
  }
  {
    const auto g = sym4();
    GroupHom<PermModel> h(trefoil(), g, {perm1({2, 1, 3, 4}), perm1({1, 3, 2, 4})});
    visit("trefoil into S4 (not onto)", h,
          std::vector{sub(g, {perm1({2, 1, 3, 4}), perm1({1, 3, 2, 4})}, "S3"), sub(g, {perm1({2, 3, 4, 1})}, "C4")});
  }
  {
    const auto g = cyc(6);
    GroupHom<PermModel> h(torus(), g, {g.generators()[0], g.mul(g.generators()[0], g.mul(g.generators()[0], g.generators()[0]))});
    const auto s2 = g.mul(g.generators()[0], g.generators()[0]);
    visit("torus onto C6", h, std::vector{sub(g, {}, "1"), sub(g, {s2}, "C3")});
  }
  {
    const auto g = make_dihedral(4);
    const auto& m = g.model();
    GroupHom<DihedralModel> h(klein(), g, {m.rotation(1), m.reflection(0)});
    visit("Klein bottle onto D4", h,
          std::vector{sub(g, {}, "1"), sub(g, {m.reflection(0)}, "C2"), sub(g, {m.rotation(1)}, "C4"),
                      sub(g, {m.rotation(2), m.reflection(0)}, "V4")});
  }
  {
    const auto g = make_dihedral(4);
    const auto& m = g.model();
    GroupHom<DihedralModel> h(pres({"a", "b"}, {"a^4", "b^2", "a b a b"}), g, {m.rotation(1), m.reflection(1)});
    visit("D4 presentation onto D4", h, std::vector{sub(g, {}, "1"), sub(g, {m.reflection(0)}, "C2")});
  }
  {
    const auto g = make_dihedral(6);
    const auto& m = g.model();
    GroupHom<DihedralModel> h(pres({"a", "b"}, {"b^2", "a b a b"}), g, {m.rotation(1), m.reflection(0)});
    visit("infinite dihedral onto D6", h,
          std::vector{sub(g, {}, "1"), sub(g, {m.reflection(0)}, "C2"), sub(g, {m.rotation(2)}, "C3")});
  }
  {
    const auto g = alt4();
    GroupHom<PermModel> h(free2(), g, {perm1({2, 3, 1, 4}), perm1({1, 3, 4, 2})});
    visit("free group onto A4", h,
          std::vector{sub(g, {}, "1"), sub(g, {perm1({1, 3, 4, 2})}, "C3"),
                      sub(g, {perm1({2, 1, 4, 3}), perm1({3, 4, 1, 2})}, "V4")});
  }
  {
    const auto g = sym3();
    GroupHom<PermModel> h(genus2(), g, {perm1({2, 1, 3}), perm1({3, 2, 1}), perm1({3, 2, 1}), perm1({2, 1, 3})});
    visit("genus 2 onto S3", h, std::vector{sub(g, {}, "1"), sub(g, {perm1({2, 1, 3})}, "<(12)>")});
  }
  {
    const auto g = make_gl2(2);
    const auto& m = g.model();
    GroupHom<Gl2Model> h(modular(), g, {m.make(0, 1, 1, 0), m.make(0, 1, 1, 1)});
    visit("C2*C3 onto GL2(F2)", h, std::vector{sub(g, {}, "1"), gl2_subgroup(g, "B")});
  }
}

/// Orbits of the image of h on U\G, counted with an explicit union-find.
template <GroupModel M>
std::size_t coset_orbits(const GroupHom<M>& h, const Subgroup<M>& u) {
  const oracle::ExplicitCosets<M> cosets(h.target(), u);
  std::vector<std::size_t> parent(cosets.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& x : h.images())
    for (std::size_t c = 0; c < cosets.size(); ++c) parent[find(c)] = find(cosets.act(h.target().model(), c, x));
  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < cosets.size(); ++c) roots.insert(find(c));
  return roots.size();
}

/// H_1 against Reidemeister-Schreier, d2 d1 = 0, and H_0 = Z^orbits.
inline std::vector<PropertyResult> homology_oracle_suite() {
  std::vector<PropertyResult> out;
  for_each_small_case([&](const std::string& name, const auto& h, const auto& subs) {
    for (const auto& u : subs) {
      PropertyResult r{name + " / " + u.name(), false, {}};
      const auto b = boundary_matrices(h, u);
      const auto fast = homology_h1(b, /*verify_saturation=*/true);
      const auto slow = oracle::reidemeister_schreier_h1(h, u);
      const auto h0 = homology_h0(b);
      const auto orbits = coset_orbits(h, u);
      const bool complex_ok = (b.d2 * b.d1).is_zero();
      const bool h0_ok = h0.torsion.empty() && h0.free_rank == orbits;
      r.passed = fast == slow && complex_ok && h0_ok && homology_h1_dim(b, 0) == fast.free_rank;
      r.detail = "H1 " + fast.to_string() + " vs oracle " + slow.to_string() + ", H0 " + h0.to_string() + " with " +
                 std::to_string(orbits) + " orbits";
      out.push_back(std::move(r));
    }
  });
  return out;
}

// ---- regulator constants ------------------------------------------------

/// Square class computed with the default pairing and two random invariant
/// pairings; the three must agree.
template <GroupModel M>
PropertyResult pairing_case(const std::string& name, const BurnsideRelation<M>& rel, const RationalRep<M>& rep) {
  const auto base = regulator_constant(rel, rep).square_class;
  const auto r1 = regulator_constant(rel, rep, invariant_pairing(rep, 11, true)).square_class;
  const auto r2 = regulator_constant(rel, rep, invariant_pairing(rep, 29, true)).square_class;
  return {name + " / " + rep.name(), base == r1 && base == r2,
          base.to_string() + " " + r1.to_string() + " " + r2.to_string()};
}

inline RatMatrix shear(std::size_t n) {
  RatMatrix a = RatMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = Rational(i % 2 ? -1 : 2);
  if (n > 1) a(n - 1, 0) = Rational(1, 3);
  return a;
}

inline std::vector<PropertyResult> pairing_independence_suite() {
  std::vector<PropertyResult> out;
  for (unsigned n : {3u, 5u, 7u}) {
    const auto g = make_dihedral(n);
    BurnsideRelation<DihedralModel> rel(g);
    rel.add(1, dihedral_subgroup(g, "1")).add(-2, dihedral_subgroup(g, "C2")).add(-1, dihedral_subgroup(g, "Cp")).add(2, dihedral_subgroup(g, "G"));
    const std::string name = "dihedral(" + std::to_string(n) + ")";
    const auto sign = character_rep<DihedralModel>(g, [](const Dihedral& x) { return Rational(x.s ? -1 : 1); }, "sign");
    out.push_back(pairing_case(name, rel, trivial_rep(g)));
    out.push_back(pairing_case(name, rel, perm_rep(g, dihedral_subgroup(g, "C2"))));
    out.push_back(pairing_case(name, rel, perm_rep(g, dihedral_subgroup(g, "Cp"))));
    out.push_back(pairing_case(name, rel, direct_sum(sign, perm_rep(g, dihedral_subgroup(g, "C2")))));
    out.push_back(pairing_case(name, rel, conjugated(perm_rep(g, dihedral_subgroup(g, "C2")), shear(n))));
  }
  {
    const auto g = make_gl2(3);
    BurnsideRelation<Gl2Model> rel(g);
    rel.add(1, gl2_subgroup(g, "U1")).add(-1, gl2_subgroup(g, "U2"));
    const auto i = gl2_principal_sign_rep(g);
    out.push_back(pairing_case("gl2(3)", rel, trivial_rep(g)));
    out.push_back(pairing_case("gl2(3)", rel, i));
    out.push_back(pairing_case("gl2(3)", rel, gl2_det_character(g)));
    out.push_back(pairing_case("gl2(3)", rel, perm_rep(g, gl2_subgroup(g, "B"))));
    out.push_back(pairing_case("gl2(3)", rel, perm_rep(g, gl2_subgroup(g, "T"))));
    out.push_back(pairing_case("gl2(3)", rel, direct_sum(i, gl2_det_character(g))));
    out.push_back(pairing_case("gl2(3)", rel, conjugated(i, shear(i.dim()))));
  }
  {
    const auto g = make_affine_mod8();
    BurnsideRelation<AffineModel> rel(g);
    rel.add(1, affine_subgroup(g, "U1")).add(-1, affine_subgroup(g, "U2"));
    const auto i = affine_principal_rep(g);
    out.push_back(pairing_case("affine_mod8", rel, i));
    out.push_back(pairing_case("affine_mod8", rel, affine_plane_rep(g, 0)));
    out.push_back(pairing_case("affine_mod8", rel, affine_plane_rep(g, 1)));
    out.push_back(pairing_case("affine_mod8", rel, affine_linear_character(g, 3)));
    out.push_back(pairing_case("affine_mod8", rel, direct_sum(i, affine_plane_rep(g, 1))));
    out.push_back(pairing_case("affine_mod8", rel, conjugated(affine_plane_rep(g, 0), shear(2))));
    out.push_back(pairing_case("affine_mod8", rel, conjugated(i, shear(i.dim()))));
  }
  return out;
}

/// C_Theta(Ind_B^G r) = C_{Res_B Theta}(r) for r([[a,b],[0,d]]) = (a/p).
inline PropertyResult frobenius_case(unsigned p) {
  const auto g = make_gl2(p);
  BurnsideRelation<Gl2Model> rel(g);
  rel.add(1, gl2_subgroup(g, "U1")).add(-1, gl2_subgroup(g, "U2"));
  const auto lhs = regulator_constant(rel, gl2_principal_sign_rep(g)).square_class;
  const auto b = gl2_subgroup(g, "B");
  const auto res = mackey_restrict(rel, b);
  const auto& bg = res.group();
  const auto r = character_rep<Gl2Model>(bg, [p](const Mat2& x) { return Rational(nt::legendre(x.a(), p)); }, "r");
  const auto rhs = regulator_constant(res, r).square_class;
  return {"Frobenius gl2(" + std::to_string(p) + ")", lhs == rhs && validate_relation(res).is_q_relation,
          "Ind side " + lhs.to_string() + ", restricted side " + rhs.to_string()};
}

inline std::vector<PropertyResult> frobenius_suite() {
  return {frobenius_case(3), frobenius_case(5), frobenius_case(7)};
}

// ---- homomorphism search ------------------------------------------------

template <GroupModel M>
PropertyResult enumeration_case(const std::string& name, std::shared_ptr<const FpPresentation> p,
                                const FiniteGroup<M>& g) {
  using E = typename M::element_type;
  const auto tuples = oracle::all_hom_tuples(*p, g);
  std::set<std::vector<E>> all(tuples.begin(), tuples.end()), orbits;
  for (const auto& t : tuples)
    if (oracle::closure_size(g.model(), t) == g.order()) orbits.insert(oracle::conjugacy_canonical(g, t));

  HomSearchTask<M> reduced{p, g};
  const auto found = enumerate_homs(reduced);
  std::set<std::vector<E>> found_orbits;
  for (const auto& h : found) found_orbits.insert(oracle::conjugacy_canonical(g, h.images()));

  HomSearchTask<M> full{p, g};
  full.surjective_only = false;
  full.up_to_conjugacy = false;
  full.threads = 3;
  std::set<std::vector<E>> every;
  for (const auto& h : enumerate_homs(full)) every.insert(h.images());

  const bool ok = found.size() == orbits.size() && found_orbits == orbits && every == all && every.size() == tuples.size();
  return {name, ok,
          std::to_string(found.size()) + " surjections up to conjugacy (oracle " + std::to_string(orbits.size()) + "), " +
              std::to_string(every.size()) + " homs (oracle " + std::to_string(all.size()) + ")"};
}

/// Lifts of hbar through G -> G/Z against all homs into G that project to hbar.
template <GroupModel M>
PropertyResult lift_case(const std::string& name, const GroupHom<QuotientModel<M>>& hbar, const FiniteGroup<M>& g,
                         std::size_t expected_count) {
  using E = typename M::element_type;
  const auto& q = hbar.target().model();
  std::set<std::vector<E>> brute;
  for (const auto& t : oracle::all_hom_tuples(hbar.presentation(), g)) {
    bool projects = true;
    for (std::size_t j = 0; j < t.size(); ++j) projects = projects && q.canonical(t[j]) == hbar.images()[j];
    if (projects) brute.insert(t);
  }
  std::set<std::vector<E>> lifted;
  const auto lifts = central_lifts(hbar, g);
  for (const auto& h : lifts) lifted.insert(h.images());
  const bool count_ok = expected_count == static_cast<std::size_t>(-1) || lifts.size() == expected_count;
  return {name, lifted == brute && lifted.size() == lifts.size() && count_ok,
          std::to_string(lifts.size()) + " lifts (oracle " + std::to_string(brute.size()) + ")"};
}

template <GroupModel M>
FiniteGroup<QuotientModel<M>> central_quotient(const FiniteGroup<M>& g, const std::vector<typename M::element_type>& z,
                                               const std::string& kind) {
  QuotientModel<M> q(g.model(), z);
  std::vector<typename M::element_type> gens;
  for (const auto& x : g.generators()) gens.push_back(q.canonical(x));
  return FiniteGroup<QuotientModel<M>>::from_generators(q, gens, kind);
}

inline std::vector<PropertyResult> homsearch_suite() {
  std::vector<PropertyResult> out;
  out.push_back(enumeration_case("trefoil -> S3", trefoil(), sym3()));
  out.push_back(enumeration_case("free -> S3", free2(), sym3()));
  out.push_back(enumeration_case("C2*C3 -> S3", modular(), sym3()));
  out.push_back(enumeration_case("C2*C3 -> S4", modular(), sym4()));
  out.push_back(enumeration_case("Klein bottle -> D4", klein(), make_dihedral(4)));
  out.push_back(enumeration_case("torus -> C6", torus(), cyc(6)));
  out.push_back(enumeration_case("trefoil -> A4", trefoil(), alt4()));

  {
    // <a | a^2> -> C4/C2: the generator of C2 lifts only to elements of order 4
    const auto c4 = cyc(4);
    const auto sq = c4.mul(c4.generators()[0], c4.generators()[0]);
    const auto qg = central_quotient(c4, {c4.identity(), sq}, "C4/C2");
    GroupHom<QuotientModel<PermModel>> hbar(pres({"a"}, {"a^2"}), qg, {qg.generators()[0]});
    out.push_back(lift_case("<a | a^2> through C4 -> C2", hbar, c4, 0));
    GroupHom<QuotientModel<PermModel>> hfree(free2(), qg, {qg.generators()[0], qg.identity()});
    out.push_back(lift_case("free group through C4 -> C2", hfree, c4, 4));
  }
  {
    // GL2(F3) -> PGL2(F3) = S4, lifting every hom from two presentations
    const auto g = make_gl2(3);
    const auto& m = g.model();
    const auto pg = central_quotient(g, {m.make(1, 0, 0, 1), m.make(2, 0, 0, 2)}, "pgl2(3)");
    for (const auto& [pname, p] : {std::pair{std::string("C2*C3"), modular()}, std::pair{std::string("trefoil"), trefoil()}}) {
      HomSearchTask<QuotientModel<Gl2Model>> task{p, pg};
      task.surjective_only = false;
      std::size_t n = 0;
      bool ok = true;
      std::string bad;
      for (const auto& hbar : enumerate_homs(task)) {
        auto r = lift_case(pname, hbar, g, static_cast<std::size_t>(-1));
        if (!r.passed) ok = false, bad = r.detail;
        ++n;
      }
      out.push_back({pname + " through GL2(F3) -> PGL2(F3)", ok && n > 0,
                     std::to_string(n) + " homs to PGL2(F3) lifted" + (bad.empty() ? "" : "; failure: " + bad)});
    }
  }
  return out;
}

}  // namespace props
