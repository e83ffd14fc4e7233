#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/classes.hpp"
#include "gassmann/group/cosets.hpp"
#include "gassmann/group/finite_group.hpp"
#include "gassmann/linalg/matrix.hpp"

namespace gassmann {

template <GroupModel M>
struct RelationTerm {
  std::int64_t coeff;
  Subgroup<M> subgroup;
};

/// Formal combination sum_j n_j U_j of subgroups of a fixed group.
template <GroupModel M>
class BurnsideRelation {
 public:
  explicit BurnsideRelation(FiniteGroup<M> group) : group_(std::move(group)) {}
  BurnsideRelation(FiniteGroup<M> group, std::vector<RelationTerm<M>> terms)
      : group_(std::move(group)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      detail::require_input(group_.order() % t.subgroup.order() == 0,
                            "relation term " + t.subgroup.name() + " is not a subgroup of the group");
  }

  BurnsideRelation& add(std::int64_t coeff, Subgroup<M> u) {
    detail::require_input(group_.order() % u.order() == 0,
                          "relation term " + u.name() + " is not a subgroup of the group");
    terms_.push_back({coeff, std::move(u)});
    return *this;
  }

  [[nodiscard]] const FiniteGroup<M>& group() const { return group_; }
  [[nodiscard]] const std::vector<RelationTerm<M>>& terms() const { return terms_; }
  [[nodiscard]] std::int64_t coeff_sum() const {
    std::int64_t s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return s;
  }
  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += t.coeff < 0 ? " - " : " + ";
      else if (t.coeff < 0) s += "-";
      const auto a = t.coeff < 0 ? -t.coeff : t.coeff;
      if (a != 1) s += std::to_string(a) + "*";
      s += t.subgroup.name().empty() ? "<" + std::to_string(t.subgroup.order()) + ">" : t.subgroup.name();
    }
    return s.empty() ? "0" : s;
  }

 private:
  FiniteGroup<M> group_;
  std::vector<RelationTerm<M>> terms_;
};

/// #(c n U_j) per class key and term. Keys are ordered for deterministic output.
struct GassmannTable {
  std::map<ClassKey, std::vector<std::uint64_t>> counts;
};

template <GroupModel M>
GassmannTable gassmann_table(const ClassKeyer<M>& keyer, const std::vector<const Subgroup<M>*>& subgroups) {
  GassmannTable table;
  for (std::size_t j = 0; j < subgroups.size(); ++j)
    for (const auto& x : subgroups[j]->elements()) {
      auto& row = table.counts[keyer.key(x)];
      row.resize(subgroups.size(), 0);
      ++row[j];
    }
  return table;
}

struct RelationValidation {
  bool is_q_relation = false;
  GassmannTable table;
  std::int64_t coeff_sum = 0;
};

/// The permutation characters cancel iff sum_j n_j #(c n U_j)/|U_j| = 0 for every class c.
template <GroupModel M>
RelationValidation validate_relation(const BurnsideRelation<M>& rel) {
  ClassKeyer<M> keyer(rel.group());
  std::vector<const Subgroup<M>*> subs;
  mpz_class lcm = 1;
  for (const auto& t : rel.terms()) {
    subs.push_back(&t.subgroup);
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), t.subgroup.order());
  }
  RelationValidation out;
  out.table = gassmann_table(keyer, subs);
  out.coeff_sum = rel.coeff_sum();
  out.is_q_relation = true;
  for (const auto& [key, counts] : out.table.counts) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < counts.size(); ++j)
      s += mpz_class(lcm / rel.terms()[j].subgroup.order()) * static_cast<long>(counts[j]) *
           static_cast<long>(rel.terms()[j].coeff);
    if (s != 0) {
      out.is_q_relation = false;
      break;
    }
  }
  return out;
}

struct GassmannResult {
  bool equivalent = false;
  GassmannTable table;
};

template <GroupModel M>
GassmannResult gassmann_check(const FiniteGroup<M>& g, const Subgroup<M>& u1, const Subgroup<M>& u2) {
  ClassKeyer<M> keyer(g);
  GassmannResult out;
  out.table = gassmann_table<M>(keyer, {&u1, &u2});
  out.equivalent = u1.order() == u2.order();
  for (const auto& [key, counts] : out.table.counts)
    if (counts[0] != counts[1]) out.equivalent = false;
  return out;
}

/// Res_D sum_j n_j U_j = sum_j n_j sum_{x in U_j\G/D} (D n x^-1 U_j x), a
/// relation over D viewed as a group. Conjugate duplicates stay separate.
template <GroupModel M>
BurnsideRelation<M> mackey_restrict(const BurnsideRelation<M>& rel, const Subgroup<M>& d,
                                    const std::vector<typename M::element_type>& preferred = {}) {
  BurnsideRelation<M> out(d.as_group());
  for (const auto& t : rel.terms()) {
    for (auto& dc : double_cosets(rel.group(), t.subgroup, d, preferred)) {
      out.add(t.coeff,
              dc.intersection.with_name(t.subgroup.name() + "^" + rel.group().model().format(dc.representative)));
    }
  }
  return out;
}

/// prod_j |U_j|^(-n_j).
template <GroupModel M>
Rational relation_triv_constant(const BurnsideRelation<M>& rel) {
  Rational c = 1;
  for (const auto& t : rel.terms()) {
    mpz_class o = static_cast<unsigned long>(t.subgroup.order());
    mpz_class pw;
    const auto e = static_cast<unsigned long>(t.coeff < 0 ? -t.coeff : t.coeff);
    mpz_pow_ui(pw.get_mpz_t(), o.get_mpz_t(), e);
    if (t.coeff > 0) c /= Rational(pw);
    else c *= Rational(pw);
  }
  c.canonicalize();
  return c;
}

}  // namespace gassmann
