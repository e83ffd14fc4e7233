#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gassmann/error.hpp"
#include "gassmann/group/model.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

/// 2x2 matrix over F_p, p < 256, packed one byte per entry (a b / c d).
struct Mat2 {
  std::uint32_t packed = 0;

  static constexpr Mat2 make(unsigned a, unsigned b, unsigned c, unsigned d) {
    return Mat2{a | (b << 8) | (c << 16) | (d << 24)};
  }
  [[nodiscard]] constexpr unsigned a() const { return packed & 0xffu; }
  [[nodiscard]] constexpr unsigned b() const { return (packed >> 8) & 0xffu; }
  [[nodiscard]] constexpr unsigned c() const { return (packed >> 16) & 0xffu; }
  [[nodiscard]] constexpr unsigned d() const { return packed >> 24; }

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

class Gl2Model {
 public:
  using element_type = Mat2;
  struct hash {
    std::size_t operator()(const Mat2& m) const noexcept { return std::hash<std::uint32_t>{}(m.packed * 0x9e3779b1u); }
  };

  explicit Gl2Model(unsigned p) : p_(p) {
    detail::require_input(p >= 2 && p < 256 && nt::is_prime(static_cast<std::int64_t>(p)),
                          "gl2: p must be a prime below 256");
  }

  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] std::uint64_t full_order() const {
    const std::uint64_t p = p_;
    return (p * p - 1) * (p * p - p);
  }

  [[nodiscard]] Mat2 identity() const { return Mat2::make(1, 0, 0, 1); }

  [[nodiscard]] Mat2 mul(const Mat2& x, const Mat2& y) const {
    return Mat2::make((x.a() * y.a() + x.b() * y.c()) % p_, (x.a() * y.b() + x.b() * y.d()) % p_,
                      (x.c() * y.a() + x.d() * y.c()) % p_, (x.c() * y.b() + x.d() * y.d()) % p_);
  }

  [[nodiscard]] unsigned det(const Mat2& x) const { return (x.a() * x.d() + p_ * p_ - x.b() * x.c()) % p_; }
  [[nodiscard]] unsigned trace(const Mat2& x) const { return (x.a() + x.d()) % p_; }
  [[nodiscard]] bool is_scalar(const Mat2& x) const { return x.b() == 0 && x.c() == 0 && x.a() == x.d(); }

  [[nodiscard]] Mat2 inv(const Mat2& x) const {
    const unsigned di = static_cast<unsigned>(nt::inverse_mod(det(x), p_));
    auto neg = [&](unsigned v) { return (p_ - v) % p_; };
    return Mat2::make(x.d() * di % p_, neg(x.b()) * di % p_, neg(x.c()) * di % p_, x.a() * di % p_);
  }

  [[nodiscard]] bool is_valid(const Mat2& x) const {
    return x.a() < p_ && x.b() < p_ && x.c() < p_ && x.d() < p_ && det(x) != 0;
  }

  /// Reduce arbitrary integers mod p; throws on a singular matrix.
  [[nodiscard]] Mat2 make(long a, long b, long c, long d) const {
    auto r = [&](long v) { return static_cast<unsigned>(nt::mod(v, p_)); };
    Mat2 m = Mat2::make(r(a), r(b), r(c), r(d));
    detail::require_input(det(m) != 0, "gl2: matrix is singular mod p");
    return m;
  }

  [[nodiscard]] std::string format(const Mat2& x) const {
    return "[[" + std::to_string(x.a()) + "," + std::to_string(x.b()) + "],[" + std::to_string(x.c()) + "," +
           std::to_string(x.d()) + "]]";
  }

  [[nodiscard]] std::size_t dense_size() const { return std::size_t{p_} * p_ * p_ * p_; }
  [[nodiscard]] std::size_t dense_index(const Mat2& x) const {
    return x.a() + p_ * (x.b() + p_ * (x.c() + std::size_t{p_} * x.d()));
  }

  /// Over the full GL2(F_p) a class is fixed by (trace, det) plus, for a
  /// repeated eigenvalue, whether the matrix is scalar.
  [[nodiscard]] std::optional<ClassKey> analytic_class_key(const Mat2& x, std::uint64_t group_order) const {
    if (group_order != full_order()) return std::nullopt;
    return ClassKey{trace(x) | (std::uint64_t{det(x)} << 8) | (std::uint64_t{is_scalar(x)} << 16)};
  }

 private:
  unsigned p_;
};

}  // namespace gassmann
