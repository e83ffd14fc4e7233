#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace gassmann {

/// Opaque fingerprint of a conjugacy class in a fixed ambient group.
struct ClassKey {
  std::uint64_t value = 0;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
  std::size_t operator()(ClassKey k) const noexcept { return std::hash<std::uint64_t>{}(k.value); }
};

/// A group model supplies element arithmetic for one concrete family of
/// groups; FiniteGroup pairs it with generators and an order.
template <class M>
concept GroupModel = requires(const M& m, const typename M::element_type& x) {
  typename M::element_type;
  typename M::hash;
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.mul(x, x) } -> std::convertible_to<typename M::element_type>;
  { m.inv(x) } -> std::convertible_to<typename M::element_type>;
  { m.is_valid(x) } -> std::convertible_to<bool>;
  { m.format(x) } -> std::convertible_to<std::string>;
  { typename M::hash{}(x) } -> std::convertible_to<std::size_t>;
} && std::totally_ordered<typename M::element_type>;

/// Models whose elements map injectively into [0, dense_size()), which lets
/// closures use a bitmap instead of a hash set.
template <class M>
concept DenselyIndexed = GroupModel<M> && requires(const M& m, const typename M::element_type& x) {
  { m.dense_size() } -> std::convertible_to<std::size_t>;
  { m.dense_index(x) } -> std::convertible_to<std::size_t>;
};

/// Models with a closed-form conjugacy invariant. The model returns nullopt
/// when the invariant does not apply to the group of the given order (e.g.
/// a proper subgroup of GL2 viewed as a group in its own right).
template <class M>
concept HasAnalyticClassKey =
    GroupModel<M> && requires(const M& m, const typename M::element_type& x, std::uint64_t order) {
      { m.analytic_class_key(x, order) } -> std::same_as<std::optional<ClassKey>>;
    };

}  // namespace gassmann
