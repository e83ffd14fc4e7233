#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/finite_group.hpp"
#include "gassmann/group/model.hpp"

namespace gassmann {

/// Maps elements of a fixed group to conjugacy-class keys. It uses the
/// model's closed-form key when one applies; otherwise it enumerates the
/// classes (|G| <= 10^6).
template <GroupModel M>
class ClassKeyer {
 public:
  using element_type = typename M::element_type;
  static constexpr std::uint64_t enumeration_limit = 1'000'000;

  explicit ClassKeyer(const FiniteGroup<M>& g) : model_(g.model()), order_(g.order()) {
    if constexpr (HasAnalyticClassKey<M>) {
      if (model_.analytic_class_key(model_.identity(), order_)) {
        analytic_ = true;
        return;
      }
    }
    if (order_ > enumeration_limit)
      throw ResourceError("conjugacy class enumeration needs |G| <= 10^6");
    enumerate(g);
  }

  [[nodiscard]] ClassKey key(const element_type& x) const {
    if constexpr (HasAnalyticClassKey<M>) {
      if (analytic_) return *model_.analytic_class_key(x, order_);
    }
    auto it = class_of_.find(x);
    detail::require_input(it != class_of_.end(), "element is not in the group");
    return ClassKey{it->second};
  }

  [[nodiscard]] bool is_analytic() const { return analytic_; }
  /// Number of classes; only known when the classes were enumerated.
  [[nodiscard]] std::optional<std::size_t> class_count() const {
    if (analytic_) return std::nullopt;
    return class_count_;
  }

 private:
  void enumerate(const FiniteGroup<M>& g) {
    std::vector<element_type> gen_inv;
    for (const auto& s : g.generators()) gen_inv.push_back(model_.inv(s));
    for (const auto& x : g.elements()) {
      if (class_of_.contains(x)) continue;
      const std::uint64_t id = class_count_++;
      std::deque<element_type> queue{x};
      class_of_.emplace(x, id);
      while (!queue.empty()) {
        element_type y = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gen_inv.size(); ++i) {
          element_type z = model_.mul(model_.mul(gen_inv[i], y), g.generators()[i]);
          if (class_of_.emplace(z, id).second) queue.push_back(std::move(z));
        }
      }
    }
  }

  M model_;
  std::uint64_t order_;
  bool analytic_ = false;
  std::unordered_map<element_type, std::uint64_t, typename M::hash> class_of_;
  std::size_t class_count_ = 0;
};

/// Convenience wrapper; builds a keyer per call, so prefer ClassKeyer in loops.
template <GroupModel M>
ClassKey class_key(const FiniteGroup<M>& g, const typename M::element_type& x) {
  return ClassKeyer<M>(g).key(x);
}

}  // namespace gassmann
