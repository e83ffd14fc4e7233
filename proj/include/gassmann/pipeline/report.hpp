#pragma once

// Torsion comparison across a relation: per-term H_1 of the intermediate
// covers, the p-adic valuation of the torsion-order quotient, the prime-to-|G|
// consistency assertion, the Betti/torsion parity cross-check, and F_p
// screening of many homomorphisms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gassmann/abelian.hpp"
#include "gassmann/burnside.hpp"
#include "gassmann/error.hpp"
#include "gassmann/fp/homology.hpp"
#include "gassmann/number_theory.hpp"
#include "gassmann/parallel.hpp"
#include "gassmann/pipeline/spec_io.hpp"

namespace gassmann {

struct TermHomology {
  std::string subgroup;
  std::int64_t coeff = 0;
  std::uint64_t index = 0;
  std::size_t betti = 0;
  AbelianInvariants h1;
};

struct ParityResult {
  std::uint64_t prime = 0;
  std::int64_t torsion_ord = 0;  // ord_p of the torsion-order quotient
  std::size_t betti_u1 = 0;
  std::size_t betti_reference = 0;
  unsigned torsion_parity = 0;
  unsigned betti_parity = 0;
  bool consistent = false;
};

struct SunadaReport {
  std::string group;
  std::uint64_t group_order = 0;
  /// p for gl2(p); 0 for the other group kinds.
  std::uint64_t characteristic = 0;
  std::vector<std::string> warnings;
  TermHomology base;
  std::vector<TermHomology> terms;
  bool q_relation = true;
  std::int64_t coeff_sum = 0;
  std::vector<mpz_class> primes;
  /// ord_p(prod_j #H_1(X/U_j)_tors^{n_j}) for each reported prime.
  std::map<mpz_class, std::int64_t> torsion_quotient_ord;
  /// Primes not dividing |G| whose primary parts were checked to match.
  std::vector<mpz_class> coprime_checked;
  std::optional<ParityResult> parity;
};

namespace detail {

inline std::uint64_t group_characteristic(const std::string& kind) {
  return kind.rfind("gl2(", 0) == 0 ? std::stoull(kind.substr(4)) : 0;
}

/// Multiset of (exponent) over the relation side with the given sign, each
/// term's p-primary exponents repeated |n_j| times.
inline std::vector<unsigned> side_primary(const std::vector<TermHomology>& terms, const mpz_class& p, int sign) {
  std::vector<unsigned> out;
  for (const auto& t : terms) {
    if ((t.coeff > 0 ? 1 : -1) != sign || t.coeff == 0) continue;
    const auto es = t.h1.primary_part(p);
    for (std::int64_t k = 0; k < (t.coeff < 0 ? -t.coeff : t.coeff); ++k) out.insert(out.end(), es.begin(), es.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

template <GroupModel M>
TermHomology term_homology(const GroupHom<M>& h, const Subgroup<M>& u, std::int64_t coeff) {
  const CosetTable<M> table(h.target(), u);
  const auto b = boundary_matrices(h, table);
  const auto h0 = homology_h0(b);
  detail::require_internal(h0.torsion.empty(), "H_0 has torsion");
  if (h.is_surjective()) detail::require_internal(h0.free_rank == 1, "H_0 is not Z for a surjective homomorphism");
  TermHomology t{u.name(), coeff, table.size(), 0, homology_h1(b)};
  t.betti = t.h1.free_rank;
  return t;
}

/// parity_check: for Theta = U1 - U2 in gl2(p), ord_p of the torsion quotient
/// and b1(X/U1) - b1(X/B) must have the same parity.
inline ParityResult parity_check(const SunadaReport& report, std::size_t betti_u1, std::size_t betti_b) {
  detail::require_input(report.characteristic != 0, "parity check needs a gl2(p) report");
  detail::require_input(report.terms.size() == 2 && report.terms[0].coeff == -report.terms[1].coeff &&
                            (report.terms[0].coeff == 1 || report.terms[0].coeff == -1),
                        "parity check needs a relation of the form U1 - U2");
  ParityResult r;
  r.prime = report.characteristic;
  const mpz_class p = static_cast<unsigned long>(report.characteristic);
  std::int64_t ord = 0;
  for (const auto& t : report.terms)
    ord += t.coeff * static_cast<std::int64_t>(nt::valuation(t.h1.torsion_order(), p));
  r.torsion_ord = ord;
  r.betti_u1 = betti_u1;
  r.betti_reference = betti_b;
  r.torsion_parity = static_cast<unsigned>((ord % 2 + 2) % 2);
  const auto diff = static_cast<std::int64_t>(betti_u1) - static_cast<std::int64_t>(betti_b);
  r.betti_parity = static_cast<unsigned>((diff % 2 + 2) % 2);
  r.consistent = r.torsion_parity == r.betti_parity;
  return r;
}

/// Full report for one homomorphism. The relation must be a Q[G]-relation;
/// for every prime p not dividing |G| the p-primary parts must cancel across
/// it, and a violation is an internal error. parity_reference (B for gl2)
/// adds the parity section, taking b1 of the term named U1.
template <GroupModel M>
SunadaReport run_report(const GroupHom<M>& h, const BurnsideRelation<M>& rel, const std::vector<mpz_class>& primes,
                        const std::optional<Subgroup<M>>& parity_reference = std::nullopt) {
  const auto& g = h.target();
  SunadaReport r;
  r.group = g.kind();
  r.group_order = g.order();
  r.characteristic = detail::group_characteristic(g.kind());
  r.warnings = h.presentation().warnings();
  r.coeff_sum = rel.coeff_sum();
  const auto validation = validate_relation(rel);
  r.q_relation = validation.is_q_relation;
  detail::require_input(r.q_relation, rel.to_string() + " is not a Q[G]-relation (coefficient sum " +
                                          std::to_string(r.coeff_sum) + ")");
  r.base = term_homology(h, subgroup_closure(g, g.generators(), "G"), 0);
  for (const auto& t : rel.terms()) r.terms.push_back(term_homology(h, t.subgroup, t.coeff));

  std::map<mpz_class, bool> all_primes;
  for (const auto& t : r.terms)
    for (const auto& [p, es] : t.h1.primary_decomposition()) all_primes[p] = true;
  const mpz_class order = static_cast<unsigned long>(g.order());
  for (const auto& [p, _] : all_primes) {
    if (mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t())) continue;
    if (detail::side_primary(r.terms, p, 1) != detail::side_primary(r.terms, p, -1))
      throw InternalError("p-primary parts differ across the relation for p = " + p.get_str() + " not dividing |G|");
    r.coprime_checked.push_back(p);
  }
  r.primes = primes;
  if (r.primes.empty())
    for (const auto& [p, _] : all_primes) r.primes.push_back(p);
  std::sort(r.primes.begin(), r.primes.end());
  r.primes.erase(std::unique(r.primes.begin(), r.primes.end()), r.primes.end());
  for (const auto& p : r.primes) {
    std::int64_t ord = 0;
    for (const auto& t : r.terms) ord += t.coeff * static_cast<std::int64_t>(nt::valuation(t.h1.torsion_order(), p));
    r.torsion_quotient_ord[p] = ord;
  }
  if (parity_reference) {
    const auto it = std::find_if(r.terms.begin(), r.terms.end(), [](const auto& t) { return t.subgroup == "U1"; });
    detail::require_input(it != r.terms.end(), "parity check needs a term named U1");
    const auto ref = term_homology(h, *parity_reference, 0);
    r.parity = parity_check(r, it->betti, ref.betti);
  }
  return r;
}

inline io::Json term_json(const TermHomology& t, const std::vector<mpz_class>& primes) {
  io::Json factors = io::Json::array();
  for (const auto& d : t.h1.torsion) factors.push_back(io::integer_json(d));
  io::Json primary = io::Json::object();
  for (const auto& p : primes) primary[p.get_str()] = t.h1.primary_part(p);
  return {{"subgroup", t.subgroup}, {"coeff", t.coeff},     {"index", t.index},
          {"betti", t.betti},       {"invariant_factors", factors}, {"primary", primary},
          {"homology", t.h1.to_string()}};
}

inline io::Json report_json(const SunadaReport& r) {
  io::Json terms = io::Json::array();
  for (const auto& t : r.terms) terms.push_back(term_json(t, r.primes));
  io::Json ords = io::Json::object();
  for (const auto& [p, o] : r.torsion_quotient_ord) ords[p.get_str()] = o;
  io::Json coprime = io::Json::array();
  for (const auto& p : r.coprime_checked) coprime.push_back(io::integer_json(p));
  io::Json out = {{"group", r.group},
                  {"group_order", r.group_order},
                  {"base", term_json(r.base, {})},
                  {"terms", terms},
                  {"relation_checks",
                   {{"q_relation", r.q_relation},
                    {"coeff_sum", r.coeff_sum},
                    {"torsion_quotient_ord", ords},
                    {"coprime_primary_equal", coprime}}}};
  if (r.parity) {
    const auto& p = *r.parity;
    out["parity"] = {{"prime", p.prime},
                     {"torsion_ord", p.torsion_ord},
                     {"betti_U1", p.betti_u1},
                     {"betti_reference", p.betti_reference},
                     {"torsion_parity", p.torsion_parity},
                     {"betti_parity", p.betti_parity},
                     {"consistent", p.consistent}};
  } else {
    out["parity"] = nullptr;
  }
  if (!r.warnings.empty()) out["warnings"] = r.warnings;
  return out;
}

struct ScreenRow {
  std::size_t hom = 0;
  std::vector<std::size_t> dims;  // dim_{F_p} H_1 per relation term
  std::int64_t signed_sum = 0;    // sum_j n_j dims_j
  bool flagged = false;
};

/// dim_{F_p} H_1(X/U_j) for every hom and term; a hom is flagged when the
/// signed sum is nonzero. For p not dividing |G| a flag would contradict
/// the coprime cancellation, so it is an internal error.
template <GroupModel M>
std::vector<ScreenRow> screen(const std::vector<GroupHom<M>>& homs, const BurnsideRelation<M>& rel, std::int64_t p,
                              unsigned threads = 1) {
  detail::require_input(nt::is_prime(p), "screening prime must be prime");
  detail::require_input(validate_relation(rel).is_q_relation, rel.to_string() + " is not a Q[G]-relation");
  std::vector<CosetTable<M>> tables;
  for (const auto& t : rel.terms()) tables.emplace_back(rel.group(), t.subgroup);
  const bool coprime = rel.group().order() % static_cast<std::uint64_t>(p) != 0;

  std::vector<ScreenRow> rows(homs.size());
  auto work = [&](std::size_t i) {
    ScreenRow row{i, {}, 0, false};
    for (std::size_t j = 0; j < tables.size(); ++j) {
      const auto d = homology_h1_dim(boundary_matrices(homs[i], tables[j]), p);
      row.dims.push_back(d);
      row.signed_sum += rel.terms()[j].coeff * static_cast<std::int64_t>(d);
    }
    row.flagged = row.signed_sum != 0;
    rows[i] = std::move(row);
  };
  const unsigned width = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(homs.size())));
  if (width == 1) {
    for (std::size_t i = 0; i < homs.size(); ++i) work(i);
  } else {
    parallel_for(homs.size(), width, work);
  }
  for (const auto& row : rows)
    if (coprime && row.flagged)
      throw InternalError("screen flagged a hom for p = " + std::to_string(p) + " not dividing |G|");
  return rows;
}

inline io::Json screen_json(const std::vector<ScreenRow>& rows, std::int64_t p) {
  io::Json out = io::Json::array();
  for (const auto& r : rows)
    out.push_back({{"hom", r.hom}, {"prime", p}, {"dims", r.dims}, {"signed_sum", r.signed_sum}, {"flagged", r.flagged}});
  return out;
}

}  // namespace gassmann
