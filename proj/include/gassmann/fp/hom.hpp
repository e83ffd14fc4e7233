#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/fp/presentation.hpp"
#include "gassmann/group/finite_group.hpp"

namespace gassmann {

/// Evaluate a word given the images of the generators.
template <GroupModel M>
typename M::element_type evaluate_word(const M& model, const std::vector<typename M::element_type>& images,
                                       const std::vector<typename M::element_type>& inverses, const Word& w) {
  auto x = model.identity();
  for (const auto& l : w.letters()) x = model.mul(x, l.exp > 0 ? images[l.gen] : inverses[l.gen]);
  return x;
}

/// Homomorphism from a finitely presented group to a finite group, fixed
/// by generator images. Construction fails unless every relator maps to 1.
template <GroupModel M>
class GroupHom {
 public:
  using element_type = typename M::element_type;

  GroupHom(std::shared_ptr<const FpPresentation> pres, FiniteGroup<M> target, std::vector<element_type> images)
      : pres_(std::move(pres)), target_(std::move(target)), images_(std::move(images)) {
    detail::require_input(pres_ != nullptr, "homomorphism needs a presentation");
    detail::require_input(images_.size() == pres_->generator_count(), "one image per generator is required");
    const auto& model = target_.model();
    for (const auto& x : images_) {
      detail::require_input(model.is_valid(x), "generator image is not an element of the target group");
      inverses_.push_back(model.inv(x));
    }
    for (std::size_t i = 0; i < pres_->relator_count(); ++i)
      detail::require_input(evaluate(pres_->relators()[i]) == model.identity(),
                            "relator " + std::to_string(i + 1) + " does not map to the identity");
  }

  GroupHom(const FpPresentation& pres, FiniteGroup<M> target, std::vector<element_type> images)
      : GroupHom(std::make_shared<const FpPresentation>(pres), std::move(target), std::move(images)) {}

  [[nodiscard]] const FpPresentation& presentation() const { return *pres_; }
  [[nodiscard]] std::shared_ptr<const FpPresentation> presentation_ptr() const { return pres_; }
  [[nodiscard]] const FiniteGroup<M>& target() const { return target_; }
  [[nodiscard]] const std::vector<element_type>& images() const { return images_; }
  [[nodiscard]] element_type evaluate(const Word& w) const {
    return evaluate_word(target_.model(), images_, inverses_, w);
  }
  [[nodiscard]] bool is_surjective() const { return generates_group(target_, images_); }

 private:
  std::shared_ptr<const FpPresentation> pres_;
  FiniteGroup<M> target_;
  std::vector<element_type> images_;
  std::vector<element_type> inverses_;
};

}  // namespace gassmann
