#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/finite_group.hpp"
#include "gassmann/group/gl2.hpp"
#include "gassmann/group/small_groups.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

// Built-in groups and the named subgroups used by the examples.

inline FiniteGroup<Gl2Model> make_gl2(unsigned p) {
  Gl2Model m(p);
  const long g = nt::primitive_root(p);
  // The Borel subgroup and the Weyl element generate GL2 (Bruhat decomposition).
  std::vector<Mat2> gens{m.make(g, 0, 0, 1), m.make(1, 0, 0, g), m.make(1, 1, 0, 1), m.make(0, 1, 1, 0)};
  const auto order = m.full_order();
  return FiniteGroup<Gl2Model>(m, std::move(gens), order, "gl2(" + std::to_string(p) + ")");
}

/// Names: G, 1, B (upper triangular), U1 (B with square lower-right entry),
/// U2 (B with square upper-left entry), T (diagonal torus), T1 = U1 n T,
/// T2 = U2 n T, Z (scalars), N (unipotent upper triangular).
inline Subgroup<Gl2Model> gl2_subgroup(const FiniteGroup<Gl2Model>& G, const std::string& name) {
  const auto& m = G.model();
  const long g = nt::primitive_root(m.p());
  const Mat2 unip = m.make(1, 1, 0, 1);
  std::vector<Mat2> gens;
  if (name == "G") gens = G.generators();
  else if (name == "1") gens = {};
  else if (name == "B") gens = {m.make(g, 0, 0, 1), m.make(1, 0, 0, g), unip};
  else if (name == "U1") gens = {m.make(g, 0, 0, 1), m.make(1, 0, 0, g * g), unip};
  else if (name == "U2") gens = {m.make(g * g, 0, 0, 1), m.make(1, 0, 0, g), unip};
  else if (name == "T") gens = {m.make(g, 0, 0, 1), m.make(1, 0, 0, g)};
  else if (name == "T1") gens = {m.make(g, 0, 0, 1), m.make(1, 0, 0, g * g)};
  else if (name == "T2") gens = {m.make(g * g, 0, 0, 1), m.make(1, 0, 0, g)};
  else if (name == "Z") gens = {m.make(g, 0, 0, g)};
  else if (name == "N") gens = {unip};
  else throw InputError("unknown gl2 subgroup name: " + name);
  return subgroup_closure(G, std::move(gens), name);
}

inline FiniteGroup<AffineModel> make_affine_mod8() {
  AffineModel m(8);
  return FiniteGroup<AffineModel>(m, {m.make(3, 0), m.make(5, 0), m.make(1, 1)}, 32, "affine_mod8");
}

/// Names: G, 1, U1 = {T_{a,0}}, U2 = <T_{-1,0}, T_{3,4}>, N (translations).
inline Subgroup<AffineModel> affine_subgroup(const FiniteGroup<AffineModel>& G, const std::string& name) {
  const auto& m = G.model();
  std::vector<Affine> gens;
  if (name == "G") gens = G.generators();
  else if (name == "1") gens = {};
  else if (name == "U1") gens = {m.make(3, 0), m.make(5, 0)};
  else if (name == "U2") gens = {m.make(-1, 0), m.make(3, 4)};
  else if (name == "N") gens = {m.make(1, 1)};
  else throw InputError("unknown affine subgroup name: " + name);
  return subgroup_closure(G, std::move(gens), name);
}

inline FiniteGroup<DihedralModel> make_dihedral(unsigned n) {
  DihedralModel m(n);
  return FiniteGroup<DihedralModel>(m, {m.rotation(1), m.reflection(0)}, 2ull * n,
                                    "dihedral(" + std::to_string(n) + ")");
}

/// Names: G, 1, C2 (generated by a reflection), Cn or Cp (rotations).
inline Subgroup<DihedralModel> dihedral_subgroup(const FiniteGroup<DihedralModel>& G, const std::string& name) {
  const auto& m = G.model();
  std::vector<Dihedral> gens;
  if (name == "G") gens = G.generators();
  else if (name == "1") gens = {};
  else if (name == "C2") gens = {m.reflection(0)};
  else if (name == "Cn" || name == "Cp") gens = {m.rotation(1)};
  else throw InputError("unknown dihedral subgroup name: " + name);
  return subgroup_closure(G, std::move(gens), name);
}

inline FiniteGroup<PermModel> make_perm_group(unsigned degree, std::vector<Perm> gens, std::string kind = "perm") {
  return FiniteGroup<PermModel>::from_generators(PermModel(degree), std::move(gens), std::move(kind));
}

inline Subgroup<PermModel> perm_subgroup(const FiniteGroup<PermModel>& G, const std::string& name) {
  if (name == "G") return subgroup_closure(G, G.generators(), name);
  if (name == "1") return subgroup_closure(G, {}, name);
  throw InputError("permutation groups only name G and 1; give explicit generators");
}

}  // namespace gassmann
