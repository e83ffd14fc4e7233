#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "gassmann/group/catalog.hpp"
#include "gassmann/group/classes.hpp"
#include "gassmann/group/cosets.hpp"
#include "gassmann/group/quotient.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gassmann;

namespace {

/// The keyer's partition of G must coincide with the explicit conjugacy classes.
template <GroupModel M>
void check_class_partition(const FiniteGroup<M>& g) {
  const ClassKeyer<M> keyer(g);
  const auto classes = oracle::conjugacy_classes(g);
  std::set<ClassKey> keys;
  for (const auto& cls : classes) {
    const auto k = keyer.key(*cls.begin());
    for (const auto& x : cls) CHECK(keyer.key(x) == k);
    keys.insert(k);
  }
  CHECK(keys.size() == classes.size());
}

}  // namespace

TEST_CASE("group orders by closure", "[group]") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto g = make_gl2(p);
    CHECK(oracle::closure_size(g.model(), g.generators()) == g.order());
  }
  CHECK(make_gl2(37).order() == (37ull * 37 - 1) * (37ull * 37 - 37));
  const auto a = make_affine_mod8();
  CHECK(oracle::closure_size(a.model(), a.generators()) == 32);
  CHECK(make_dihedral(5).elements().size() == 10);
  CHECK(props::sym4().order() == 24);
  CHECK(props::alt4().order() == 12);
}

TEST_CASE("named subgroups have the expected orders", "[group]") {
  const auto g = make_gl2(5);
  CHECK(gl2_subgroup(g, "B").order() == 80);
  CHECK(gl2_subgroup(g, "U1").order() == 40);
  CHECK(gl2_subgroup(g, "U2").order() == 40);
  CHECK(gl2_subgroup(g, "T").order() == 16);
  CHECK(gl2_subgroup(g, "Z").order() == 4);
  CHECK(gl2_subgroup(g, "N").order() == 5);
  CHECK_THROWS_AS(gl2_subgroup(g, "Q"), InputError);
  const auto a = make_affine_mod8();
  CHECK(affine_subgroup(a, "U1").order() == 4);
  CHECK(affine_subgroup(a, "U2").order() == 4);
  CHECK(affine_subgroup(a, "N").order() == 8);
}

TEST_CASE("class keys partition the group into conjugacy classes", "[group][oracle]") {
  check_class_partition(make_gl2(3));
  check_class_partition(make_gl2(5));
  check_class_partition(make_affine_mod8());
  check_class_partition(make_dihedral(6));
  check_class_partition(props::sym4());
  CHECK(oracle::conjugacy_classes(make_gl2(3)).size() == 8);
  CHECK(oracle::conjugacy_classes(make_affine_mod8()).size() == 11);
  // the analytic key is used for the full GL2, enumeration otherwise
  CHECK(ClassKeyer<Gl2Model>(make_gl2(5)).is_analytic());
  CHECK_FALSE(ClassKeyer<Gl2Model>(gl2_subgroup(make_gl2(5), "B").as_group()).is_analytic());
}

TEST_CASE("analytic class count of GL2(F_p) is p^2 - 1", "[group]") {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto g = make_gl2(p);
    const ClassKeyer<Gl2Model> keyer(g);
    std::set<ClassKey> keys;
    for (const auto& x : g.elements()) keys.insert(keyer.key(x));
    CHECK(keys.size() == p * p - 1);
  }
}

TEST_CASE("coset tables round-trip and act as a right action", "[cosets]") {
  const auto g = make_gl2(5);
  for (const char* name : {"B", "U1", "T", "1"}) {
    const auto u = gl2_subgroup(g, name);
    const CosetTable<Gl2Model> t(g, u);
    REQUIRE(t.size() == g.order() / u.order());
    for (std::size_t c = 0; c < t.size(); ++c) CHECK(t.index_of(t.representative(c)) == c);
    CHECK(t.index_of(g.identity()) == 0);
    const auto& m = g.model();
    const auto x = m.make(2, 1, 3, 3), y = m.make(1, 4, 0, 1);
    const auto px = t.permutation(x), py = t.permutation(y), pxy = t.permutation(m.mul(x, y));
    for (std::size_t c = 0; c < t.size(); ++c) CHECK(pxy[c] == py[px[c]]);
  }
}

TEST_CASE("coset tables reject subgroups of another group", "[cosets]") {
  const auto g = make_dihedral(4);
  const auto h = make_dihedral(8);
  const auto r = subgroup_closure(h, {h.model().rotation(1)}, "C8");
  CHECK_THROWS_AS(CosetTable<DihedralModel>(g, r), InputError);
}

TEST_CASE("double cosets of U1 and B in gl2(5)", "[cosets]") {
  const auto g = make_gl2(5);
  const auto& m = g.model();
  const auto u1 = gl2_subgroup(g, "U1"), b = gl2_subgroup(g, "B");
  const Mat2 w = m.make(0, 1, 1, 0);
  const auto dcs = double_cosets(g, u1, b, {g.identity(), w});
  REQUIRE(dcs.size() == 2);
  std::map<std::uint64_t, Mat2> by_order;
  std::size_t total = 0;
  for (const auto& dc : dcs) {
    by_order[dc.intersection.order()] = dc.representative;
    total += dc.size_in_cosets;
  }
  CHECK(total == 12);
  CHECK(by_order.at(40) == g.identity());
  CHECK(by_order.at(8) == w);
}

TEST_CASE("double cosets partition U\\G for random subgroup pairs", "[cosets][oracle]") {
  const auto g = props::sym4();
  const std::vector<Subgroup<PermModel>> subs{
      props::sub(g, {props::perm1({2, 1, 3, 4})}, "a"), props::sub(g, {props::perm1({2, 3, 4, 1})}, "b"),
      props::sub(g, {props::perm1({2, 1, 3, 4}), props::perm1({1, 3, 2, 4})}, "c"),
      props::sub(g, {props::perm1({2, 1, 4, 3}), props::perm1({3, 4, 1, 2})}, "d")};
  for (const auto& u : subs)
    for (const auto& d : subs) {
      const auto dcs = double_cosets(g, u, d);
      // brute force: U x D as element sets
      std::set<std::set<Perm>> brute;
      for (const auto& x : g.elements()) {
        std::set<Perm> s;
        for (const auto& a : u.elements())
          for (const auto& e : d.elements()) s.insert(g.mul(g.mul(a, x), e));
        brute.insert(s);
      }
      CHECK(dcs.size() == brute.size());
      std::size_t cosets = 0;
      for (const auto& dc : dcs) cosets += dc.size_in_cosets;
      CHECK(cosets == g.order() / u.order());
    }
}

TEST_CASE("subgroup construction", "[group]") {
  const auto g = make_gl2(3);
  const auto b = gl2_subgroup(g, "B");
  const auto again = Subgroup<Gl2Model>::from_elements(g.model(), b.elements(), "B'");
  CHECK(again.elements() == b.elements());
  CHECK(again.order() == 12);
  CHECK(generates_group(g, g.generators()));
  CHECK_FALSE(generates_group(g, b.generators()));
  const auto z = gl2_subgroup(g, "Z");
  const auto inter = conjugate_intersection(b, z, g.model().make(0, 1, 1, 0));
  CHECK(inter.order() == 2);
  CHECK_THROWS_AS(Gl2Model(4), InputError);
  CHECK_THROWS_AS(g.model().make(1, 1, 1, 1), InputError);
}

TEST_CASE("central quotient model", "[group]") {
  const auto g = make_gl2(3);
  const auto& m = g.model();
  const auto pg = props::central_quotient(g, {m.make(1, 0, 0, 1), m.make(2, 0, 0, 2)}, "pgl2(3)");
  CHECK(pg.order() == 24);
  CHECK(oracle::conjugacy_classes(pg).size() == 5);  // S4
  const auto& q = pg.model();
  const auto x = m.make(1, 1, 0, 1);
  CHECK(q.canonical(x) == q.canonical(m.mul(x, m.make(2, 0, 0, 2))));
}
