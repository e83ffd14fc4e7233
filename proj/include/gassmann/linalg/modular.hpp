#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "gassmann/linalg/matrix.hpp"
#include "gassmann/linalg/snf.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

/// Rank of m over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  detail::require_input(nt::is_prime(p), "rank_mod_p: modulus is not prime");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + j]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[piv * cols + k], a[r * cols + k]);
    const std::int64_t inv = nt::inverse_mod(a[r * cols + j], p);
    for (std::size_t k = j; k < cols; ++k) a[r * cols + k] = a[r * cols + k] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = a[i * cols + j];
      if (!f) continue;
      for (std::size_t k = j; k < cols; ++k) {
        const std::int64_t x = a[r * cols + k];
        if (x) a[i * cols + k] = nt::mod(a[i * cols + k] - f * x, p);
      }
    }
    ++r;
  }
  return r;
}

/// Solution set of A f = x over Z/N: the coset particular + span(kernel).
struct ModularSolutionSet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> particular;
  /// Generators of {f : A f = 0 mod N}, with the additive order of each.
  std::vector<std::vector<std::int64_t>> kernel;
  std::vector<std::int64_t> kernel_orders;

  /// Number of solutions (= number of kernel elements).
  [[nodiscard]] std::uint64_t count() const {
    std::uint64_t c = 1;
    for (auto o : kernel_orders) c *= static_cast<std::uint64_t>(o);
    return c;
  }

  /// Visit every solution exactly once. The kernel generators are
  /// independent (they come from a unimodular change of basis), so the
  /// mixed-radix walk below never repeats a vector.
  void for_each(const std::function<void(const std::vector<std::int64_t>&)>& visit) const {
    std::vector<std::int64_t> digit(kernel.size(), 0);
    std::vector<std::int64_t> f = particular;
    for (;;) {
      visit(f);
      std::size_t i = 0;
      for (; i < kernel.size(); ++i) {
        for (std::size_t k = 0; k < f.size(); ++k) f[k] = nt::mod(f[k] + kernel[i][k], modulus);
        if (++digit[i] < kernel_orders[i]) break;
        digit[i] = 0;  // wrapped around: f is back to its value before this digit moved
      }
      if (i == kernel.size()) return;
    }
  }
};

/// All f in (Z/N)^n with A f = x (A is r x n over Z, read modulo N), or
/// nullopt if there is none.
inline std::optional<ModularSolutionSet> solve_affine_mod_N(const IntMatrix& a, const std::vector<std::int64_t>& x,
                                                            std::int64_t modulus) {
  detail::require_input(modulus >= 1, "modulus must be positive");
  detail::require_input(x.size() == a.rows(), "right-hand side has the wrong length");
  const std::size_t r = a.rows(), n = a.cols();
  const std::int64_t N = modulus;
  auto snf = smith_normal_form(a, /*with_transforms=*/true);
  const IntMatrix& L = *snf.left;
  const IntMatrix& R = *snf.right;
  const std::size_t k = snf.factors.size();

  // y = L x mod N
  std::vector<std::int64_t> y(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < r; ++j) acc += L(i, j) * static_cast<long>(x[j]);
    y[i] = static_cast<std::int64_t>(mpz_fdiv_ui(acc.get_mpz_t(), N));
  }
  for (std::size_t i = k; i < r; ++i)
    if (y[i] % N != 0) return std::nullopt;

  // D g = y mod N, coordinate-wise
  std::vector<std::int64_t> g(n, 0);
  std::vector<std::pair<std::size_t, std::int64_t>> steps;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < k) {
      const std::int64_t d = static_cast<std::int64_t>(mpz_fdiv_ui(snf.factors[i].get_mpz_t(), N));
      const std::int64_t e = std::gcd(d, N);  // gcd(0, N) = N
      if (y[i] % e != 0) return std::nullopt;
      const std::int64_t Ne = N / e;
      const std::int64_t de = (d / e) % Ne;
      g[i] = Ne == 1 ? 0 : nt::mod((y[i] / e) * nt::inverse_mod(de, Ne), Ne);
      if (e > 1) {
        steps.emplace_back(i, Ne);
        orders.push_back(e);
      }
    } else if (N > 1) {
      steps.emplace_back(i, 1);
      orders.push_back(N);
    }
  }

  auto apply_R = [&](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> f(n, 0);
    for (std::size_t row = 0; row < n; ++row) {
      mpz_class acc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (v[c]) acc += R(row, c) * static_cast<long>(v[c]);
      f[row] = static_cast<std::int64_t>(mpz_fdiv_ui(acc.get_mpz_t(), N));
    }
    return f;
  };

  ModularSolutionSet out;
  out.modulus = N;
  out.particular = apply_R(g);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    std::vector<std::int64_t> unit(n, 0);
    unit[steps[s].first] = steps[s].second;
    out.kernel.push_back(apply_R(unit));
    out.kernel_orders.push_back(orders[s]);
  }
  return out;
}

}  // namespace gassmann
