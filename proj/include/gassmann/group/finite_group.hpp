#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/model.hpp"

namespace gassmann {

struct ClosureResult {
  std::uint64_t size = 0;
  bool truncated = false;
};

/// Breadth-first closure of gens under right multiplication. Calls
/// visit(x) once per element. Stops early once more than limit elements
/// are found, reporting truncated.
template <GroupModel M, class Visit>
ClosureResult for_each_in_closure(const M& model, const std::vector<typename M::element_type>& gens,
                                  std::uint64_t limit, Visit&& visit) {
  using E = typename M::element_type;
  ClosureResult out;
  std::deque<E> queue;
  auto push = [&](E x, auto&& mark) {
    if (!mark(x)) return;
    ++out.size;
    visit(x);
    queue.push_back(std::move(x));
  };
  auto run = [&](auto&& mark) {
    push(model.identity(), mark);
    while (!queue.empty()) {
      E x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        push(model.mul(x, g), mark);
        if (out.size > limit) {
          out.truncated = true;
          return;
        }
      }
    }
  };
  if constexpr (DenselyIndexed<M>) {
    std::vector<bool> seen(model.dense_size(), false);
    run([&](const E& x) {
      auto i = model.dense_index(x);
      if (seen[i]) return false;
      seen[i] = true;
      return true;
    });
  } else {
    std::unordered_set<E, typename M::hash> seen;
    run([&](const E& x) { return seen.insert(x).second; });
  }
  return out;
}

/// Sorted elements of <gens>. Throws ResourceError above limit.
template <GroupModel M>
std::vector<typename M::element_type> closure_elements(const M& model,
                                                       const std::vector<typename M::element_type>& gens,
                                                       std::uint64_t limit = 2'000'000) {
  std::vector<typename M::element_type> out;
  auto r = for_each_in_closure(model, gens, limit, [&](const auto& x) { out.push_back(x); });
  if (r.truncated) throw ResourceError("closure exceeds " + std::to_string(limit) + " elements");
  std::sort(out.begin(), out.end());
  return out;
}

template <GroupModel M>
class FiniteGroup {
 public:
  using model_type = M;
  using element_type = typename M::element_type;

  FiniteGroup(M model, std::vector<element_type> gens, std::uint64_t order, std::string kind)
      : model_(std::move(model)), gens_(std::move(gens)), order_(order), kind_(std::move(kind)) {
    for (const auto& g : gens_) detail::require_input(model_.is_valid(g), "group generator is not a valid element");
  }

  /// Order computed by closure.
  static FiniteGroup from_generators(M model, std::vector<element_type> gens, std::string kind,
                                     std::uint64_t limit = 2'000'000) {
    for (const auto& g : gens) detail::require_input(model.is_valid(g), "group generator is not a valid element");
    auto r = for_each_in_closure(model, gens, limit, [](const auto&) {});
    if (r.truncated) throw ResourceError("group order exceeds " + std::to_string(limit));
    return FiniteGroup(std::move(model), std::move(gens), r.size, std::move(kind));
  }

  [[nodiscard]] const M& model() const { return model_; }
  [[nodiscard]] const std::vector<element_type>& generators() const { return gens_; }
  [[nodiscard]] std::uint64_t order() const { return order_; }
  [[nodiscard]] const std::string& kind() const { return kind_; }
  [[nodiscard]] element_type identity() const { return model_.identity(); }
  [[nodiscard]] element_type mul(const element_type& x, const element_type& y) const { return model_.mul(x, y); }
  [[nodiscard]] element_type inv(const element_type& x) const { return model_.inv(x); }
  [[nodiscard]] std::vector<element_type> elements(std::uint64_t limit = 2'000'000) const {
    return closure_elements(model_, gens_, limit);
  }

 private:
  M model_;
  std::vector<element_type> gens_;
  std::uint64_t order_;
  std::string kind_;
};

/// True iff gens generate a group of the same order as g. Callers must
/// already know gens lie in g.
template <GroupModel M>
bool generates_group(const FiniteGroup<M>& g, const std::vector<typename M::element_type>& gens) {
  auto r = for_each_in_closure(g.model(), gens, g.order(), [](const auto&) {});
  return !r.truncated && r.size == g.order();
}

template <GroupModel M>
class Subgroup {
 public:
  using element_type = typename M::element_type;

  Subgroup(M model, std::vector<element_type> gens, std::string name, std::uint64_t limit = 2'000'000)
      : model_(std::move(model)), gens_(std::move(gens)), name_(std::move(name)) {
    for (const auto& g : gens_)
      detail::require_input(model_.is_valid(g), "subgroup generator is not a valid element");
    elements_ = closure_elements(model_, gens_, limit);
  }

  /// From a set already known to be closed; generators are picked greedily.
  static Subgroup from_elements(M model, std::vector<element_type> elements, std::string name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<element_type> gens;
    std::uint64_t reached = 1;
    for (const auto& x : elements) {
      if (reached == elements.size()) break;
      gens.push_back(x);
      auto r = for_each_in_closure(model, gens, elements.size(), [](const auto&) {});
      detail::require_internal(!r.truncated, "from_elements: element set is not closed");
      if (r.size == reached) gens.pop_back();
      else reached = r.size;
    }
    detail::require_internal(reached == elements.size(), "from_elements: element set is not closed");
    Subgroup s(std::move(model), std::move(gens), std::move(name), elements.size());
    detail::require_internal(s.elements_ == elements, "from_elements: element set is not closed");
    return s;
  }

  [[nodiscard]] const M& model() const { return model_; }
  [[nodiscard]] const std::vector<element_type>& generators() const { return gens_; }
  [[nodiscard]] const std::vector<element_type>& elements() const { return elements_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::uint64_t order() const { return elements_.size(); }
  [[nodiscard]] bool contains(const element_type& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }
  [[nodiscard]] Subgroup with_name(std::string name) const {
    Subgroup s = *this;
    s.name_ = std::move(name);
    return s;
  }
  [[nodiscard]] FiniteGroup<M> as_group() const { return FiniteGroup<M>(model_, gens_, order(), name_); }

 private:
  M model_;
  std::vector<element_type> gens_;
  std::vector<element_type> elements_;
  std::string name_;
};

/// Subgroup of g generated by gens; rejects gens outside the model.
template <GroupModel M>
Subgroup<M> subgroup_closure(const FiniteGroup<M>& g, std::vector<typename M::element_type> gens,
                             std::string name = {}) {
  std::optional<Subgroup<M>> s;
  try {
    s.emplace(g.model(), std::move(gens), std::move(name), g.order());
  } catch (const ResourceError&) {
    throw InputError("subgroup is larger than the ambient group");
  }
  detail::require_input(g.order() % s->order() == 0, "subgroup order does not divide the group order");
  return std::move(*s);
}

}  // namespace gassmann
