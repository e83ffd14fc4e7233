#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gassmann/fp/word.hpp"

namespace gassmann {

/// Element of the integral group ring of a free group; zero coefficients are never stored.
class FreeDerivative {
 public:
  FreeDerivative() = default;
  static FreeDerivative of(const Word& w, std::int64_t c = 1) {
    FreeDerivative d;
    d.add(w, c);
    return d;
  }

  void add(const Word& w, std::int64_t c) {
    if (c == 0) return;
    auto& v = terms_[w];
    v += c;
    if (v == 0) terms_.erase(w);
  }

  [[nodiscard]] const std::map<Word, std::int64_t>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  friend FreeDerivative operator+(FreeDerivative a, const FreeDerivative& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend FreeDerivative operator-(FreeDerivative a, const FreeDerivative& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
  }
  friend FreeDerivative operator*(const FreeDerivative& a, const FreeDerivative& b) {
    FreeDerivative out;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) out.add(u * v, c * d);
    return out;
  }
  /// u * a, left multiplication by a group element.
  friend FreeDerivative operator*(const Word& u, const FreeDerivative& a) {
    FreeDerivative out;
    for (const auto& [v, c] : a.terms_) out.add(u * v, c);
    return out;
  }
  friend bool operator==(const FreeDerivative&, const FreeDerivative&) = default;

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const auto a = c < 0 ? -c : c;
      if (a != 1 || w.empty()) s += std::to_string(a);
      if (!w.empty()) s += (a != 1 ? "*" : "") + w.to_string(names);
    }
    return s;
  }

 private:
  std::map<Word, std::int64_t> terms_;
};

/// d w / d x_gen: each x occurrence contributes +(prefix before it), each
/// x^-1 occurrence contributes -(prefix including it).
inline FreeDerivative fox_derivative(const Word& w, std::uint32_t gen) {
  FreeDerivative d;
  Word prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == gen && l.exp == 1) d.add(prefix, 1);
    prefix.push_back(l);
    if (l.gen == gen && l.exp == -1) d.add(prefix, -1);
  }
  return d;
}

}  // namespace gassmann
