#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/finite_group.hpp"

namespace gassmann {

/// Right cosets U x of U in G, with G acting on the right: (U x) g = U x g.
/// Coset 0 is U itself.
template <GroupModel M>
class CosetTable {
 public:
  using element_type = typename M::element_type;
  static constexpr std::size_t index_limit = 200'000;

  CosetTable(const FiniteGroup<M>& g, const Subgroup<M>& u)
      : model_(g.model()), u_(std::make_shared<const Subgroup<M>>(u)), gens_(g.generators()) {
    detail::require_input(u.order() > 0 && g.order() % u.order() == 0,
                          "subgroup order does not divide the group order");
    const std::uint64_t expected = g.order() / u.order();
    if (expected > index_limit) throw ResourceError("coset table index exceeds " + std::to_string(index_limit));
    // Small U: canonical key min(U y). Large U: scan representatives.
    keyed_ = u.order() <= expected;
    add(model_.identity());
    std::vector<std::vector<std::uint32_t>> action(gens_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        const element_type y = model_.mul(reps_[c], gens_[j]);
        auto found = lookup(y);
        if (!found) {
          if (reps_.size() >= expected) throw InputError("subgroup is not contained in the group");
          found = add(y);
        }
        action[j].push_back(static_cast<std::uint32_t>(*found));
      }
    }
    detail::require_input(reps_.size() == expected, "subgroup is not contained in the group");
    gen_action_ = std::move(action);
  }

  [[nodiscard]] std::size_t size() const { return reps_.size(); }
  [[nodiscard]] const Subgroup<M>& subgroup() const { return *u_; }
  [[nodiscard]] const element_type& representative(std::size_t c) const { return reps_.at(c); }

  /// Index of the coset U x.
  [[nodiscard]] std::size_t index_of(const element_type& x) const {
    auto c = lookup(x);
    detail::require_input(c.has_value(), "element is not in the group");
    return *c;
  }
  [[nodiscard]] std::size_t act(std::size_t c, const element_type& g) const {
    return index_of(model_.mul(reps_.at(c), g));
  }
  /// Image of every coset under g; P(gh) = P(g) P(h) for the matrices c -> c.g.
  [[nodiscard]] std::vector<std::uint32_t> permutation(const element_type& g) const {
    std::vector<std::uint32_t> out(size());
    for (std::size_t c = 0; c < size(); ++c) out[c] = static_cast<std::uint32_t>(act(c, g));
    return out;
  }
  /// Action of the j-th group generator.
  [[nodiscard]] const std::vector<std::uint32_t>& generator_action(std::size_t j) const { return gen_action_.at(j); }
  [[nodiscard]] std::size_t generator_count() const { return gen_action_.size(); }

 private:
  element_type canonical(const element_type& y) const {
    const auto& els = u_->elements();
    element_type best = model_.mul(els.front(), y);
    for (std::size_t i = 1; i < els.size(); ++i) {
      element_type z = model_.mul(els[i], y);
      if (z < best) best = std::move(z);
    }
    return best;
  }

  std::optional<std::size_t> lookup(const element_type& y) const {
    if (keyed_) {
      auto it = by_key_.find(canonical(y));
      if (it == by_key_.end()) return std::nullopt;
      return it->second;
    }
    for (std::size_t c = 0; c < reps_inv_.size(); ++c)
      if (u_->contains(model_.mul(y, reps_inv_[c]))) return c;
    return std::nullopt;
  }

  std::size_t add(const element_type& y) {
    const std::size_t c = reps_.size();
    reps_.push_back(y);
    if (keyed_) by_key_.emplace(canonical(y), c);
    else reps_inv_.push_back(model_.inv(y));
    return c;
  }

  M model_;
  std::shared_ptr<const Subgroup<M>> u_;
  std::vector<element_type> gens_;
  bool keyed_ = false;
  std::vector<element_type> reps_;
  std::vector<element_type> reps_inv_;
  std::unordered_map<element_type, std::size_t, typename M::hash> by_key_;
  std::vector<std::vector<std::uint32_t>> gen_action_;
};

/// {d in D : x d x^-1 in U} = D n x^-1 U x.
template <GroupModel M>
Subgroup<M> conjugate_intersection(const Subgroup<M>& d, const Subgroup<M>& u, const typename M::element_type& x,
                                   std::string name = {}) {
  const auto& model = d.model();
  const auto xi = model.inv(x);
  std::vector<typename M::element_type> keep;
  for (const auto& e : d.elements())
    if (u.contains(model.mul(model.mul(x, e), xi))) keep.push_back(e);
  return Subgroup<M>::from_elements(model, std::move(keep), std::move(name));
}

template <GroupModel M>
struct DoubleCoset {
  typename M::element_type representative;
  /// D n x^-1 U x, the stabiliser in D of the coset U x.
  Subgroup<M> intersection;
  std::size_t size_in_cosets;
};

/// Double cosets U x D. Each entry is one D-orbit on U\G. A preferred
/// representative is used when it lies in an orbit not yet represented.
template <GroupModel M>
std::vector<DoubleCoset<M>> double_cosets(const FiniteGroup<M>& g, const Subgroup<M>& u, const Subgroup<M>& d,
                                          const std::vector<typename M::element_type>& preferred = {}) {
  CosetTable<M> table(g, u);
  const std::size_t m = table.size();
  std::vector<std::int64_t> orbit(m, -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < m; ++start) {
    if (orbit[start] >= 0) continue;
    const auto id = static_cast<std::int64_t>(orbits.size());
    orbits.emplace_back();
    std::deque<std::size_t> queue{start};
    orbit[start] = id;
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      orbits.back().push_back(c);
      for (const auto& s : d.generators()) {
        auto e = table.act(c, s);
        if (orbit[e] < 0) {
          orbit[e] = id;
          queue.push_back(e);
        }
      }
    }
  }

  std::vector<std::optional<typename M::element_type>> rep(orbits.size());
  for (const auto& x : preferred) {
    auto o = static_cast<std::size_t>(orbit[table.index_of(x)]);
    if (!rep[o]) rep[o] = x;
  }
  std::vector<DoubleCoset<M>> out;
  std::size_t total = 0;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto x = rep[o] ? *rep[o] : table.representative(orbits[o].front());
    auto inter = conjugate_intersection(d, u, x);
    detail::require_internal(d.order() / inter.order() == orbits[o].size(), "orbit-stabiliser mismatch");
    total += orbits[o].size();
    out.push_back(DoubleCoset<M>{x, std::move(inter), orbits[o].size()});
  }
  detail::require_internal(total == m, "double cosets do not partition U\\G");
  return out;
}

}  // namespace gassmann
