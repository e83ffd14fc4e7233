#pragma once

// Homomorphisms from a finitely presented group to a finite group: an
// abelianization pre-filter, backtracking enumeration up to conjugacy for
// small targets, and lifting through a central cyclic extension.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gassmann/abelian.hpp"
#include "gassmann/error.hpp"
#include "gassmann/fp/hom.hpp"
#include "gassmann/fp/presentation.hpp"
#include "gassmann/group/cosets.hpp"
#include "gassmann/group/finite_group.hpp"
#include "gassmann/group/quotient.hpp"
#include "gassmann/linalg/modular.hpp"
#include "gassmann/number_theory.hpp"
#include "gassmann/parallel.hpp"

namespace gassmann {

inline constexpr std::uint64_t max_enumeration_order = 10'000;

template <GroupModel M>
struct HomSearchTask {
  using element_type = typename M::element_type;

  std::shared_ptr<const FpPresentation> presentation = nullptr;
  FiniteGroup<M> target;
  bool surjective_only = true;
  bool up_to_conjugacy = true;
  /// Central subgroup for the lifting strategy; must commute with the target's generators.
  std::vector<element_type> central = {};
  unsigned threads = 1;

  void validate() const {
    detail::require_input(presentation != nullptr, "search task needs a presentation");
    const auto& m = target.model();
    for (const auto& z : central) {
      detail::require_input(m.is_valid(z), "central element is not in the target group");
      for (const auto& g : target.generators())
        detail::require_input(m.mul(z, g) == m.mul(g, z), "subgroup is not central: " + m.format(z));
    }
  }
};

/// Commutator subgroup [G,G], as the normal closure of the generator commutators.
template <GroupModel M>
Subgroup<M> derived_subgroup(const FiniteGroup<M>& g) {
  const auto& m = g.model();
  const auto& gens = g.generators();
  std::vector<typename M::element_type> seeds;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      auto c = m.mul(m.mul(a, b), m.mul(m.inv(a), m.inv(b)));
      if (c != m.identity()) seeds.push_back(c);
    }
  for (;;) {
    Subgroup<M> d(m, seeds, "G'");
    bool grew = false;
    for (const auto& s : d.generators()) {
      for (const auto& a : gens) {
        auto c = m.mul(m.mul(a, s), m.inv(a));
        if (!d.contains(c)) {
          seeds.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return d;
  }
}

/// G^ab = G/[G,G], read off from the orders of the cosets of [G,G].
template <GroupModel M>
AbelianInvariants group_abelianization(const FiniteGroup<M>& g) {
  const auto d = derived_subgroup(g);
  const CosetTable<M> table(g, d);
  const std::size_t n = table.size();
  // coset orders: the regular action of an abelian group is faithful
  std::vector<std::uint64_t> orders(n, 1);
  for (std::size_t c = 0; c < n; ++c) {
    const auto perm = table.permutation(table.representative(c));
    std::uint64_t order = 1;
    for (std::size_t start = 0; start < n; ++start) {
      std::uint64_t len = 1;
      for (auto x = perm[start]; x != start; x = perm[x]) ++len;
      order = std::lcm(order, len);
    }
    orders[c] = order;
  }
  std::map<mpz_class, std::vector<unsigned>> primary;
  for (const auto& [p, e] : nt::factor(mpz_class(static_cast<unsigned long>(n)))) {
    const auto pl = p.get_ui();
    // log_p |A[p^j]| = sum_i min(e_i, j)
    std::vector<unsigned> logs{0};
    std::uint64_t pj = 1;
    for (unsigned j = 1; logs.back() < e; ++j) {
      pj *= pl;
      std::uint64_t count = 0;
      for (auto o : orders)
        if (pj % o == 0) ++count;
      logs.push_back(nt::valuation(mpz_class(static_cast<unsigned long>(count)), p));
    }
    // #{i : e_i >= j} = logs[j] - logs[j-1]
    for (std::size_t j = 1; j < logs.size(); ++j) {
      const unsigned at_least_j = logs[j] - logs[j - 1];
      const unsigned at_least_next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
      for (unsigned k = at_least_next; k < at_least_j; ++k) primary[p].push_back(static_cast<unsigned>(j));
    }
  }
  return AbelianInvariants::from_primary(0, primary);
}

/// True iff the finitely generated abelian group a surjects onto the finite
/// abelian group b: for every prime p and k >= 1, b has at most as many
/// p-primary summands of order >= p^k as a has, counting free summands.
inline bool abelian_surjects(const AbelianInvariants& a, const AbelianInvariants& b) {
  detail::require_input(b.free_rank == 0, "target abelian group must be finite");
  const auto pa = a.primary_decomposition();
  for (const auto& [p, es] : b.primary_decomposition()) {
    const auto it = pa.find(p);
    const std::vector<unsigned> none;
    const auto& ea = it == pa.end() ? none : it->second;
    const unsigned top = *std::max_element(es.begin(), es.end());
    for (unsigned k = 1; k <= top; ++k) {
      const auto need = std::count_if(es.begin(), es.end(), [k](unsigned e) { return e >= k; });
      const auto have = std::count_if(ea.begin(), ea.end(), [k](unsigned e) { return e >= k; });
      if (need > have + static_cast<long>(a.free_rank)) return false;
    }
  }
  return true;
}

/// False only when no surjection Gamma -> G can exist.
template <GroupModel M>
bool abelian_prefilter(const FpPresentation& p, const FiniteGroup<M>& g) {
  return abelian_surjects(abelianization(p), group_abelianization(g));
}

namespace detail {

template <GroupModel M>
struct EnumerationContext {
  using element_type = typename M::element_type;
  const HomSearchTask<M>& task;
  std::vector<element_type> elements;
  std::vector<std::vector<std::size_t>> relators_at;  // relators whose last new generator is j
  std::size_t n = 0;
};

template <GroupModel M>
bool relators_hold(const EnumerationContext<M>& ctx, const std::vector<typename M::element_type>& images,
                   const std::vector<typename M::element_type>& inverses, std::size_t level) {
  const auto& pres = *ctx.task.presentation;
  for (auto i : ctx.relators_at[level])
    if (evaluate_word(ctx.task.target.model(), images, inverses, pres.relators()[i]) != ctx.task.target.identity())
      return false;
  return true;
}

/// Lexicographically least conjugate of the image tuple under the given conjugators.
template <GroupModel M>
bool is_canonical(const M& m, const std::vector<typename M::element_type>& images,
                  const std::vector<typename M::element_type>& conjugators) {
  for (const auto& c : conjugators) {
    const auto ci = m.inv(c);
    for (std::size_t j = 0; j < images.size(); ++j) {
      const auto y = m.mul(m.mul(c, images[j]), ci);
      if (y < images[j]) return false;
      if (images[j] < y) break;
    }
  }
  return true;
}

/// Every hom whose first image is x0; with conjugacy reduction, only the
/// tuple minimal under conjugation by the centralizer of x0 is kept.
template <GroupModel M>
std::vector<std::vector<typename M::element_type>> enumerate_branch(const EnumerationContext<M>& ctx,
                                                                    const typename M::element_type& x0) {
  using E = typename M::element_type;
  const auto& m = ctx.task.target.model();
  std::vector<E> centralizer;
  if (ctx.task.up_to_conjugacy)
    for (const auto& c : ctx.elements)
      if (m.mul(c, x0) == m.mul(x0, c)) centralizer.push_back(c);

  std::vector<std::vector<E>> found;
  std::vector<E> images(ctx.n, m.identity()), inverses(ctx.n, m.identity());
  images[0] = x0;
  inverses[0] = m.inv(x0);
  auto accept = [&] {
    if (ctx.task.up_to_conjugacy && !is_canonical(m, images, centralizer)) return;
    if (ctx.task.surjective_only && !generates_group(ctx.task.target, images)) return;
    found.push_back(images);
  };
  if (!relators_hold(ctx, images, inverses, 0)) return found;
  if (ctx.n == 1) {
    accept();
    return found;
  }
  std::vector<std::size_t> pos(ctx.n, 0);
  std::size_t level = 1;
  while (level >= 1) {
    if (pos[level] == ctx.elements.size()) {
      pos[level] = 0;
      --level;
      if (level >= 1) ++pos[level];
      continue;
    }
    images[level] = ctx.elements[pos[level]];
    inverses[level] = m.inv(images[level]);
    if (!relators_hold(ctx, images, inverses, level)) {
      ++pos[level];
      continue;
    }
    if (level + 1 == ctx.n) {
      accept();
      ++pos[level];
    } else {
      ++level;
    }
  }
  return found;
}

}  // namespace detail

/// Homomorphisms Gamma -> G by backtracking over generator images, relators
/// checked as soon as all their generators are assigned. Up to conjugacy,
/// each orbit is represented by its lexicographically least image tuple.
template <GroupModel M>
std::vector<GroupHom<M>> enumerate_homs(const HomSearchTask<M>& task) {
  using E = typename M::element_type;
  task.validate();
  detail::require_resource(task.target.order() <= max_enumeration_order,
                           "target of order " + std::to_string(task.target.order()) +
                               " is too large for backtracking; lift through a central quotient instead");
  const auto& pres = *task.presentation;
  detail::EnumerationContext<M> ctx{task, task.target.elements(), {}, pres.generator_count()};
  if (ctx.n == 0) {
    std::vector<GroupHom<M>> out;
    if (!task.surjective_only || task.target.order() == 1) out.emplace_back(task.presentation, task.target, std::vector<E>{});
    return out;
  }
  ctx.relators_at.assign(ctx.n, {});
  for (std::size_t i = 0; i < pres.relator_count(); ++i) {
    std::uint32_t last = 0;
    for (const auto& l : pres.relators()[i].letters()) last = std::max(last, l.gen);
    ctx.relators_at[last].push_back(i);
  }

  // First images: all elements, or the least element of each conjugacy class.
  std::vector<E> firsts;
  if (task.up_to_conjugacy) {
    const auto& m = task.target.model();
    std::unordered_set<E, typename M::hash> seen;
    for (const auto& x : ctx.elements) {  // ascending, so the first unseen member of a class is its least
      if (seen.count(x)) continue;
      firsts.push_back(x);
      std::vector<E> stack{x};
      seen.insert(x);
      while (!stack.empty()) {
        const auto y = stack.back();
        stack.pop_back();
        for (const auto& g : task.target.generators()) {
          auto z = m.mul(m.mul(g, y), m.inv(g));
          if (seen.insert(z).second) stack.push_back(std::move(z));
        }
      }
    }
  } else {
    firsts = ctx.elements;
  }

  std::vector<std::vector<std::vector<E>>> per_first(firsts.size());
  const unsigned width = std::max(1u, std::min<unsigned>(task.threads, static_cast<unsigned>(firsts.size())));
  if (width == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) per_first[i] = detail::enumerate_branch(ctx, firsts[i]);
  } else {
    parallel_for(firsts.size(), width, [&](std::size_t i) { per_first[i] = detail::enumerate_branch(ctx, firsts[i]); });
  }
  std::vector<GroupHom<M>> out;
  for (auto& branch : per_first)
    for (auto& images : branch) out.emplace_back(task.presentation, task.target, std::move(images));
  return out;
}

/// All lifts h: Gamma -> G of hbar: Gamma -> G/Z, for Z central and cyclic.
/// With t the lift of hbar taking each coset's stored representative,
/// h = t * f for f: Gamma -> Z, and h respects relator r_i iff
/// f(r_i) = t(r_i)^-1. Since Z is abelian, f(r_i) is the exponent-sum row of
/// r_i applied to f, so the f form the solution set of a linear system mod |Z|.
template <GroupModel M>
std::vector<GroupHom<M>> central_lifts(const GroupHom<QuotientModel<M>>& hbar, const FiniteGroup<M>& g) {
  using E = typename M::element_type;
  const auto& m = g.model();
  const auto& central = hbar.target().model().central();
  const auto n_central = static_cast<std::int64_t>(central.size());
  for (const auto& z : central) {
    detail::require_input(m.is_valid(z), "central element is not in the group");
    for (const auto& x : g.generators())
      detail::require_input(m.mul(z, x) == m.mul(x, z), "subgroup is not central: " + m.format(z));
  }
  // a generator of Z and the discrete logarithm table
  std::optional<E> zgen;
  std::unordered_map<E, std::int64_t, typename M::hash> log;
  for (const auto& z : central) {
    std::unordered_map<E, std::int64_t, typename M::hash> powers;
    E y = m.identity();
    for (std::int64_t k = 0; k < n_central; ++k) {
      if (!powers.emplace(y, k).second) break;
      y = m.mul(y, z);
    }
    if (static_cast<std::int64_t>(powers.size()) == n_central) {
      zgen = z;
      log = std::move(powers);
      break;
    }
  }
  detail::require_input(zgen.has_value(), "central subgroup is not cyclic; only cyclic kernels are supported");
  detail::require_input(log.size() == central.size(), "central elements do not form a subgroup");
  for (const auto& z : central) detail::require_input(log.count(z) == 1, "central elements do not form a subgroup");

  const auto& pres = hbar.presentation();
  std::vector<E> lift = hbar.images();
  std::vector<E> lift_inv;
  for (const auto& x : lift) {
    detail::require_input(m.is_valid(x), "image does not lift to the group");
    lift_inv.push_back(m.inv(x));
  }
  std::vector<std::int64_t> rhs;
  for (const auto& r : pres.relators()) {
    const auto v = evaluate_word(m, lift, lift_inv, r);
    const auto it = log.find(v);
    detail::require_input(it != log.end(), "lifted relator is not central; the map to the quotient is not a homomorphism");
    rhs.push_back(nt::mod(-it->second, n_central));
  }

  std::vector<GroupHom<M>> out;
  const auto solutions = solve_affine_mod_N(pres.exponent_matrix(), rhs, n_central);
  if (!solutions) return out;
  std::vector<E> zpow(static_cast<std::size_t>(n_central));
  zpow[0] = m.identity();
  for (std::size_t k = 1; k < zpow.size(); ++k) zpow[k] = m.mul(zpow[k - 1], *zgen);
  solutions->for_each([&](const std::vector<std::int64_t>& f) {
    std::vector<E> images;
    for (std::size_t j = 0; j < lift.size(); ++j) images.push_back(m.mul(lift[j], zpow[static_cast<std::size_t>(f[j])]));
    out.emplace_back(hbar.presentation_ptr(), g, std::move(images));  // revalidates every relator
  });
  return out;
}

}  // namespace gassmann
