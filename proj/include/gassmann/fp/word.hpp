#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gassmann/error.hpp"

namespace gassmann {

struct Letter {
  std::uint32_t gen = 0;
  int exp = 1;  // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on generators 0..n-1.
class Word {
 public:
  Word() = default;
  /// Reduces freely; letters may have any nonzero exponent sign.
  explicit Word(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push_back(l);
  }

  static Word generator(std::uint32_t gen, int exp = 1) {
    Word w;
    const int step = exp < 0 ? -1 : 1;
    for (int i = 0; i != exp; i += step) w.push_back({gen, step});
    return w;
  }

  void push_back(Letter l) {
    detail::require_input(l.exp == 1 || l.exp == -1, "word letters carry exponent +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) letters_.pop_back();
    else letters_.push_back(l);
  }

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] const Letter& operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }
  [[nodiscard]] Word prefix(std::size_t len) const {
    Word w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len));
    return w;
  }
  /// Sum of exponents of each generator.
  [[nodiscard]] std::vector<long> exponent_sums(std::size_t n_gens) const {
    std::vector<long> s(n_gens, 0);
    for (const auto& l : letters_) s.at(l.gen) += l.exp;
    return s;
  }

  friend Word operator*(Word a, const Word& b) {
    for (const auto& l : b.letters_) a.push_back(l);
    return a;
  }
  friend auto operator<=>(const Word&, const Word&) = default;

  /// Run-length form: "b^-1 d^-1 c d^2".
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      const long e = static_cast<long>(j - i) * letters_[i].exp;
      if (!out.empty()) out += ' ';
      out += names.at(letters_[i].gen);
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

/// Parses tokens "name" or "name^k" (k a signed integer), separated by
/// whitespace or '*'. "1" denotes the empty word.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word w;
  std::size_t i = 0;
  auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == '1' && (i + 1 == text.size() || !is_body(text[i + 1]))) {
      ++i;
      continue;
    }
    detail::require_input(is_start(c), "unexpected character '" + std::string(1, c) + "' in word");
    std::size_t j = i;
    while (j < text.size() && is_body(text[j])) ++j;
    const std::string name(text.substr(i, j - i));
    std::uint32_t gen = 0;
    for (; gen < names.size(); ++gen)
      if (names[gen] == name) break;
    detail::require_input(gen < names.size(), "unknown generator '" + name + "'");
    long exp = 1;
    i = j;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t k = i;
      if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
      const std::size_t digits = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      detail::require_input(k > digits && k - digits <= 9, "malformed exponent after '" + name + "'");
      exp = std::stol(std::string(text.substr(i, k - i)));
      i = k;
    }
    const int step = exp < 0 ? -1 : 1;
    for (long e = 0; e != exp; e += step) w.push_back({gen, step});
  }
  return w;
}

}  // namespace gassmann
