#pragma once

// JSON formats for groups, elements, subgroups, relations, presentations,
// homomorphisms and representations, and dispatch over the group kinds.

#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gassmann/burnside.hpp"
#include "gassmann/error.hpp"
#include "gassmann/fp/hom.hpp"
#include "gassmann/fp/presentation.hpp"
#include "gassmann/group/catalog.hpp"
#include "gassmann/regconst/named_reps.hpp"
#include "gassmann/regconst/rep.hpp"

namespace gassmann::io {

using Json = nlohmann::ordered_json;

inline Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  detail::require_input(in.good(), "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key) {
  detail::require_input(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("malformed ") + what);
  }
}

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
inline Json integer_json(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

// ---- elements ------------------------------------------------------------

template <class M>
struct ElementCodec;

/// [[a, b], [c, d]]
template <>
struct ElementCodec<Gl2Model> {
  static Mat2 parse(const Gl2Model& m, const Json& j) {
    const auto rows = get_as<std::vector<std::vector<long>>>(j, "gl2 matrix");
    detail::require_input(rows.size() == 2 && rows[0].size() == 2 && rows[1].size() == 2, "gl2 element must be 2x2");
    return m.make(rows[0][0], rows[0][1], rows[1][0], rows[1][1]);
  }
  static Json dump(const Gl2Model&, const Mat2& x) {
    return Json::array({Json::array({x.a(), x.b()}), Json::array({x.c(), x.d()})});
  }
};

/// [a, b] for x -> a x + b
template <>
struct ElementCodec<AffineModel> {
  static Affine parse(const AffineModel& m, const Json& j) {
    const auto v = get_as<std::vector<long>>(j, "affine element");
    detail::require_input(v.size() == 2, "affine element is [a, b]");
    return m.make(v[0], v[1]);
  }
  static Json dump(const AffineModel&, const Affine& x) { return Json::array({x.a, x.b}); }
};

/// [k, s]: rotation by k followed by s reflections
template <>
struct ElementCodec<DihedralModel> {
  static Dihedral parse(const DihedralModel& m, const Json& j) {
    const auto v = get_as<std::vector<long>>(j, "dihedral element");
    detail::require_input(v.size() == 2 && (v[1] == 0 || v[1] == 1), "dihedral element is [k, s] with s in {0, 1}");
    return v[1] ? m.reflection(v[0]) : m.rotation(v[0]);
  }
  static Json dump(const DihedralModel&, const Dihedral& x) { return Json::array({x.k, x.s}); }
};

/// 1-based image list
template <>
struct ElementCodec<PermModel> {
  static Perm parse(const PermModel& m, const Json& j) {
    return m.from_one_based(get_as<std::vector<long>>(j, "permutation"));
  }
  static Json dump(const PermModel&, const Perm& x) {
    Json out = Json::array();
    for (auto v : x.image) out.push_back(v + 1);
    return out;
  }
};

template <GroupModel M>
std::vector<typename M::element_type> parse_elements(const M& m, const Json& j) {
  detail::require_input(j.is_array(), "expected a list of elements");
  std::vector<typename M::element_type> out;
  for (const auto& e : j) out.push_back(ElementCodec<M>::parse(m, e));
  return out;
}

// ---- groups and subgroups ------------------------------------------------

inline Subgroup<Gl2Model> builtin_subgroup(const FiniteGroup<Gl2Model>& g, const std::string& n) {
  return gl2_subgroup(g, n);
}
inline Subgroup<AffineModel> builtin_subgroup(const FiniteGroup<AffineModel>& g, const std::string& n) {
  return affine_subgroup(g, n);
}
inline Subgroup<DihedralModel> builtin_subgroup(const FiniteGroup<DihedralModel>& g, const std::string& n) {
  return dihedral_subgroup(g, n);
}
inline Subgroup<PermModel> builtin_subgroup(const FiniteGroup<PermModel>& g, const std::string& n) {
  return perm_subgroup(g, n);
}

/// "U1", or {"name": "H", "gens": [element, ...]}.
template <GroupModel M>
Subgroup<M> parse_subgroup(const FiniteGroup<M>& g, const Json& j) {
  if (j.is_string()) return builtin_subgroup(g, j.get<std::string>());
  detail::require_input(j.is_object(), "subgroup is a name or {\"name\", \"gens\"}");
  const std::string name = j.value("name", std::string("H"));
  if (!j.contains("gens")) return builtin_subgroup(g, name);
  return subgroup_closure(g, parse_elements(g.model(), j.at("gens")), name);
}

/// [{"coeff": 1, "subgroup": "U1"}, ...]
template <GroupModel M>
BurnsideRelation<M> parse_relation(const FiniteGroup<M>& g, const Json& j) {
  detail::require_input(j.is_array(), "relation is a list of terms");
  BurnsideRelation<M> rel(g);
  for (const auto& t : j) rel.add(get_as<long>(field(t, "coeff"), "coefficient"), parse_subgroup(g, field(t, "subgroup")));
  return rel;
}

template <GroupModel M>
Json relation_json(const BurnsideRelation<M>& rel) {
  Json out = Json::array();
  for (const auto& t : rel.terms()) out.push_back({{"coeff", t.coeff}, {"subgroup", t.subgroup.name()}});
  return out;
}

/// Calls f(group) with the concrete FiniteGroup<M> described by the spec:
/// {"type":"gl2","p":37}, {"type":"affine_mod8"}, {"type":"dihedral","n":3},
/// {"type":"perm","degree":3,"gens":[[2,1,3],[2,3,1]]}.
template <class F>
decltype(auto) with_group(const Json& spec, F&& f) {
  const auto type = get_as<std::string>(field(spec, "type"), "group type");
  if (type == "gl2") {
    const auto p = get_as<long>(field(spec, "p"), "prime p");
    detail::require_input(p >= 2 && p < 256 && nt::is_prime(static_cast<std::int64_t>(p)), "gl2 needs a prime p < 256");
    return f(make_gl2(static_cast<unsigned>(p)));
  }
  if (type == "affine_mod8") return f(make_affine_mod8());
  if (type == "dihedral") {
    const auto n = get_as<long>(field(spec, "n"), "dihedral n");
    detail::require_input(n >= 1 && n <= 100000, "dihedral n out of range");
    return f(make_dihedral(static_cast<unsigned>(n)));
  }
  if (type == "perm") {
    const auto degree = get_as<long>(field(spec, "degree"), "permutation degree");
    detail::require_input(degree >= 1 && degree <= 4096, "permutation degree out of range");
    PermModel m(static_cast<unsigned>(degree));
    std::vector<Perm> gens;
    if (spec.contains("gens")) gens = parse_elements(m, spec.at("gens"));
    return f(make_perm_group(static_cast<unsigned>(degree), std::move(gens), spec.value("name", std::string("perm"))));
  }
  throw InputError("unknown group type '" + type + "'");
}

// ---- presentations and homomorphisms ------------------------------------

/// {"generators": ["a", ...], "relators": ["a b a^-1 b^-1", ...]}
inline std::shared_ptr<const FpPresentation> parse_presentation(const Json& j) {
  auto names = get_as<std::vector<std::string>>(field(j, "generators"), "generator list");
  std::vector<std::string> rels;
  if (j.contains("relators")) rels = get_as<std::vector<std::string>>(j.at("relators"), "relator list");
  return std::make_shared<const FpPresentation>(FpPresentation::parse(std::move(names), rels));
}

/// {"images": {"a": element, ...}} or {"images": [element, ...]} in generator order.
template <GroupModel M>
GroupHom<M> parse_hom(std::shared_ptr<const FpPresentation> pres, const FiniteGroup<M>& g, const Json& j) {
  const auto& images_json = field(j, "images");
  std::vector<typename M::element_type> images;
  if (images_json.is_array()) {
    images = parse_elements(g.model(), images_json);
  } else {
    detail::require_input(images_json.is_object(), "images are a list or a map by generator name");
    for (const auto& name : pres->names()) {
      detail::require_input(images_json.contains(name), "no image for generator '" + name + "'");
      images.push_back(ElementCodec<M>::parse(g.model(), images_json.at(name)));
    }
    detail::require_input(images_json.size() == pres->generator_count(), "image given for an undeclared generator");
  }
  return GroupHom<M>(std::move(pres), g, std::move(images));
}

template <GroupModel M>
Json hom_json(const GroupHom<M>& h) {
  Json images = Json::object();
  const auto& names = h.presentation().names();
  for (std::size_t i = 0; i < names.size(); ++i) images[names[i]] = ElementCodec<M>::dump(h.target().model(), h.images()[i]);
  return {{"images", images}};
}

// ---- representations ----------------------------------------------------

inline Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  detail::require_input(j.is_string(), "rational entries are integers or \"a/b\" strings");
  Rational q;
  detail::require_input(q.set_str(j.get<std::string>(), 10) == 0 && q.get_den() != 0, "malformed rational entry");
  q.canonicalize();
  return q;
}

namespace detail_io {
template <GroupModel M>
RationalRep<M> builtin_rep(const FiniteGroup<M>& g, const std::string& name) {
  if (name == "triv") return trivial_rep(g);
  if constexpr (std::is_same_v<M, Gl2Model>) {
    if (name == "I") return gl2_principal_sign_rep(g);
    if (name == "chi_det") return gl2_det_character(g);
  }
  if constexpr (std::is_same_v<M, AffineModel>) {
    if (name == "I") return affine_principal_rep(g);
    if (name.rfind("lin", 0) == 0 && name.size() == 4 && name[3] >= '0' && name[3] <= '7')
      return affine_linear_character(g, static_cast<unsigned>(name[3] - '0'));
    if (name == "plane0" || name == "plane1") return affine_plane_rep(g, static_cast<unsigned>(name[5] - '0'));
  }
  throw InputError("unknown representation '" + name + "' for " + g.kind());
}
}  // namespace detail_io

/// {"type":"builtin","name":"I"} | {"type":"perm","subgroup":S} |
/// {"type":"induced_sign","subgroup":S,"signs":[1,-1,...]} |
/// {"type":"matrices","matrices":[[[..],..], ...]} | {"type":"sum","of":[rep, ...]}
template <GroupModel M>
RationalRep<M> parse_rep(const FiniteGroup<M>& g, const Json& j) {
  if (j.is_string()) return detail_io::builtin_rep(g, j.get<std::string>());
  const auto type = get_as<std::string>(field(j, "type"), "representation type");
  if (type == "builtin") return detail_io::builtin_rep(g, get_as<std::string>(field(j, "name"), "representation name"));
  if (type == "perm") return perm_rep(g, parse_subgroup(g, field(j, "subgroup")));
  if (type == "induced_sign")
    return induced_sign_rep(g, parse_subgroup(g, field(j, "subgroup")), get_as<std::vector<int>>(field(j, "signs"), "signs"),
                            j.value("name", std::string{}));
  if (type == "matrices") {
    std::vector<RatMatrix> mats;
    for (const auto& mj : field(j, "matrices")) {
      detail::require_input(mj.is_array() && !mj.empty(), "representation matrix must be a nonempty list of rows");
      RatMatrix m(mj.size(), mj.at(0).size());
      for (std::size_t r = 0; r < mj.size(); ++r) {
        detail::require_input(mj[r].is_array() && mj[r].size() == m.cols(), "ragged representation matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(mj[r][c]);
      }
      mats.push_back(std::move(m));
    }
    return rep_from_generator_matrices(g, std::move(mats), j.value("name", std::string("rho")));
  }
  if (type == "sum") {
    const auto& parts = field(j, "of");
    detail::require_input(parts.is_array() && !parts.empty(), "sum needs at least one summand");
    auto acc = parse_rep(g, parts.at(0));
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parse_rep(g, parts[i]));
    return acc;
  }
  throw InputError("unknown representation type '" + type + "'");
}

}  // namespace gassmann::io
