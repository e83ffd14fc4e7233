#pragma once

#include <compare>
#include <string>

#include "gassmann/error.hpp"
#include "gassmann/linalg/matrix.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

/// Element of Q^x / (Q^x)^2 as sign times a positive squarefree integer.
struct SquareClass {
  int sign = 1;
  mpz_class squarefree = 1;

  static SquareClass of(const Rational& x) {
    detail::require_input(x != 0, "square class of zero");
    Rational r = x;
    r.canonicalize();
    // a/b and a*b differ by the square b^2.
    mpz_class n = abs(r.get_num()) * r.get_den();
    SquareClass out;
    out.sign = sgn(r) < 0 ? -1 : 1;
    out.squarefree = 1;
    for (const auto& [p, e] : nt::factor(n))
      if (e % 2 == 1) out.squarefree *= p;
    return out;
  }
  static SquareClass of(long x) { return of(Rational(x)); }

  [[nodiscard]] Rational value() const { return Rational(squarefree * sign); }
  [[nodiscard]] bool is_trivial() const { return sign == 1 && squarefree == 1; }
  [[nodiscard]] std::string to_string() const { return (sign < 0 ? "-" : "+") + squarefree.get_str(); }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    return of(a.value() * b.value());
  }
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.sign == b.sign && a.squarefree == b.squarefree;
  }
};

/// The class of x^e, e any integer.
inline SquareClass square_class_pow(const SquareClass& x, long e) {
  return (e % 2 == 0) ? SquareClass{} : x;
}

inline SquareClass squarefree_class(const Rational& x) { return SquareClass::of(x); }

}  // namespace gassmann
