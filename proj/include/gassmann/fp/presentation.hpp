#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gassmann/abelian.hpp"
#include "gassmann/error.hpp"
#include "gassmann/fp/word.hpp"
#include "gassmann/linalg/matrix.hpp"
#include "gassmann/linalg/snf.hpp"

namespace gassmann {

/// <x_1..x_n | r_1..r_r>. Relators that reduce to the empty word are dropped
/// and reported in warnings().
class FpPresentation {
 public:
  FpPresentation() = default;
  FpPresentation(std::vector<std::string> names, const std::vector<Word>& relators) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
      detail::require_input(!n.empty() && n != "1", "invalid generator name");
      detail::require_input(seen.insert(n).second, "duplicate generator name '" + n + "'");
    }
    for (std::size_t i = 0; i < relators.size(); ++i) {
      for (const auto& l : relators[i].letters())
        detail::require_input(l.gen < names_.size(), "relator uses an undeclared generator");
      if (relators[i].empty()) warnings_.push_back("relator " + std::to_string(i + 1) + " is trivial; dropped");
      else relators_.push_back(relators[i]);
    }
  }

  static FpPresentation parse(std::vector<std::string> names, const std::vector<std::string>& relators) {
    std::vector<Word> words;
    for (const auto& r : relators) words.push_back(parse_word(r, names));
    return FpPresentation(std::move(names), words);
  }

  [[nodiscard]] std::size_t generator_count() const { return names_.size(); }
  [[nodiscard]] std::size_t relator_count() const { return relators_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::vector<Word>& relators() const { return relators_; }
  [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }

  /// r x n matrix of exponent sums.
  [[nodiscard]] IntMatrix exponent_matrix() const {
    IntMatrix a(relators_.size(), names_.size());
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const auto s = relators_[i].exponent_sums(names_.size());
      for (std::size_t j = 0; j < s.size(); ++j) a(i, j) = s[j];
    }
    return a;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<std::string> warnings_;
};

/// Gamma^ab = Z^n / (row span of the exponent matrix).
inline AbelianInvariants abelianization(const FpPresentation& p) {
  const auto factors = invariant_factors(p.exponent_matrix());
  return AbelianInvariants::from_diagonal(p.generator_count() - factors.size(), factors);
}

}  // namespace gassmann
