#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/model.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

/// T_{a,b}: x -> a x + b on Z/nZ, a a unit.
struct Affine {
  std::uint16_t a = 1;
  std::uint16_t b = 0;
  friend constexpr auto operator<=>(const Affine&, const Affine&) = default;
};

/// Affine group of Z/nZ under composition: (S*T)(x) = S(T(x)).
class AffineModel {
 public:
  using element_type = Affine;
  struct hash {
    std::size_t operator()(const Affine& t) const noexcept { return (std::size_t{t.a} << 16) ^ t.b; }
  };

  explicit AffineModel(unsigned n = 8) : n_(n) { detail::require_input(n >= 2 && n < 4096, "affine: bad modulus"); }

  [[nodiscard]] unsigned modulus() const { return n_; }
  [[nodiscard]] Affine identity() const { return {1, 0}; }
  [[nodiscard]] Affine mul(const Affine& s, const Affine& t) const {
    return {static_cast<std::uint16_t>(s.a * t.a % n_), static_cast<std::uint16_t>((s.a * t.b + s.b) % n_)};
  }
  [[nodiscard]] Affine inv(const Affine& t) const {
    const auto ai = static_cast<unsigned>(nt::inverse_mod(t.a, n_));
    return {static_cast<std::uint16_t>(ai), static_cast<std::uint16_t>(ai * (n_ - t.b) % n_)};
  }
  [[nodiscard]] bool is_valid(const Affine& t) const { return t.a < n_ && t.b < n_ && std::gcd(t.a, n_) == 1u; }
  [[nodiscard]] Affine make(long a, long b) const {
    Affine t{static_cast<std::uint16_t>(nt::mod(a, n_)), static_cast<std::uint16_t>(nt::mod(b, n_))};
    detail::require_input(is_valid(t), "affine: multiplier is not a unit");
    return t;
  }
  [[nodiscard]] std::string format(const Affine& t) const {
    return "T(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
  }
  [[nodiscard]] std::size_t dense_size() const { return std::size_t{n_} * n_; }
  [[nodiscard]] std::size_t dense_index(const Affine& t) const { return std::size_t{t.a} * n_ + t.b; }

 private:
  unsigned n_;
};

/// sigma^k tau^s in the dihedral group of order 2n.
struct Dihedral {
  std::uint32_t k = 0;
  std::uint32_t s = 0;
  friend constexpr auto operator<=>(const Dihedral&, const Dihedral&) = default;
};

class DihedralModel {
 public:
  using element_type = Dihedral;
  struct hash {
    std::size_t operator()(const Dihedral& x) const noexcept { return (std::size_t{x.k} << 1) | x.s; }
  };

  explicit DihedralModel(unsigned n) : n_(n) { detail::require_input(n >= 1, "dihedral: n must be positive"); }

  [[nodiscard]] unsigned n() const { return n_; }
  [[nodiscard]] Dihedral identity() const { return {0, 0}; }
  [[nodiscard]] Dihedral mul(const Dihedral& x, const Dihedral& y) const {
    const std::uint32_t k = x.s ? (x.k + n_ - y.k) % n_ : (x.k + y.k) % n_;
    return {k, x.s ^ y.s};
  }
  [[nodiscard]] Dihedral inv(const Dihedral& x) const {
    if (x.s) return x;
    return {(n_ - x.k) % n_, 0};
  }
  [[nodiscard]] bool is_valid(const Dihedral& x) const { return x.k < n_ && x.s < 2; }
  [[nodiscard]] Dihedral rotation(long k) const { return {static_cast<std::uint32_t>(nt::mod(k, n_)), 0}; }
  [[nodiscard]] Dihedral reflection(long k) const { return {static_cast<std::uint32_t>(nt::mod(k, n_)), 1}; }
  [[nodiscard]] std::string format(const Dihedral& x) const {
    return "r^" + std::to_string(x.k) + (x.s ? " s" : "");
  }
  [[nodiscard]] std::size_t dense_size() const { return std::size_t{2} * n_; }
  [[nodiscard]] std::size_t dense_index(const Dihedral& x) const { return std::size_t{2} * x.k + x.s; }

 private:
  unsigned n_;
};

/// Permutation of {0, ..., degree-1}.
struct Perm {
  std::vector<std::uint16_t> image;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Permutations compose left to right: x^(gh) = (x^g)^h.
class PermModel {
 public:
  using element_type = Perm;
  struct hash {
    std::size_t operator()(const Perm& g) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto v : g.image) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  explicit PermModel(unsigned degree) : degree_(degree) {
    detail::require_input(degree >= 1 && degree < 65536, "perm: bad degree");
  }

  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] Perm identity() const {
    Perm g;
    g.image.resize(degree_);
    std::iota(g.image.begin(), g.image.end(), std::uint16_t{0});
    return g;
  }
  [[nodiscard]] Perm mul(const Perm& g, const Perm& h) const {
    Perm r;
    r.image.resize(degree_);
    for (unsigned i = 0; i < degree_; ++i) r.image[i] = h.image[g.image[i]];
    return r;
  }
  [[nodiscard]] Perm inv(const Perm& g) const {
    Perm r;
    r.image.resize(degree_);
    for (unsigned i = 0; i < degree_; ++i) r.image[g.image[i]] = static_cast<std::uint16_t>(i);
    return r;
  }
  [[nodiscard]] bool is_valid(const Perm& g) const {
    if (g.image.size() != degree_) return false;
    std::vector<bool> seen(degree_, false);
    for (auto v : g.image) {
      if (v >= degree_ || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  /// From 1-based images, as written in the JSON group format.
  [[nodiscard]] Perm from_one_based(const std::vector<long>& images) const {
    detail::require_input(images.size() == degree_, "perm: image list has the wrong length");
    Perm g;
    for (long v : images) {
      detail::require_input(v >= 1 && v <= static_cast<long>(degree_), "perm: image out of range");
      g.image.push_back(static_cast<std::uint16_t>(v - 1));
    }
    detail::require_input(is_valid(g), "perm: images do not form a permutation");
    return g;
  }
  [[nodiscard]] std::string format(const Perm& g) const {
    std::string s = "[";
    for (unsigned i = 0; i < degree_; ++i) s += (i ? "," : "") + std::to_string(g.image[i] + 1);
    return s + "]";
  }

 private:
  unsigned degree_;
};

}  // namespace gassmann
