#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/model.hpp"

namespace gassmann {

/// G/Z for a central subgroup Z, with each coset stored as its minimal
/// element x*z. Z must be central; the constructor does not verify this.
template <GroupModel M>
class QuotientModel {
 public:
  using base_element = typename M::element_type;
  using element_type = base_element;
  using hash = typename M::hash;

  QuotientModel(M base, std::vector<base_element> central) : base_(std::move(base)) {
    std::sort(central.begin(), central.end());
    central.erase(std::unique(central.begin(), central.end()), central.end());
    detail::require_input(!central.empty(), "quotient: central subgroup is empty");
    central_ = std::make_shared<const std::vector<base_element>>(std::move(central));
  }

  [[nodiscard]] const M& base() const { return base_; }
  [[nodiscard]] const std::vector<base_element>& central() const { return *central_; }

  [[nodiscard]] base_element canonical(const base_element& x) const {
    base_element best = base_.mul(x, central_->front());
    for (std::size_t i = 1; i < central_->size(); ++i) {
      base_element y = base_.mul(x, (*central_)[i]);
      if (y < best) best = std::move(y);
    }
    return best;
  }

  [[nodiscard]] element_type identity() const { return canonical(base_.identity()); }
  [[nodiscard]] element_type mul(const element_type& x, const element_type& y) const {
    return canonical(base_.mul(x, y));
  }
  [[nodiscard]] element_type inv(const element_type& x) const { return canonical(base_.inv(x)); }
  [[nodiscard]] bool is_valid(const element_type& x) const { return base_.is_valid(x) && canonical(x) == x; }
  [[nodiscard]] std::string format(const element_type& x) const { return base_.format(x) + "Z"; }

 private:
  M base_;
  std::shared_ptr<const std::vector<base_element>> central_;
};

}  // namespace gassmann
