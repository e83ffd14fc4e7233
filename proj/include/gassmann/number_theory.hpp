#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"

namespace gassmann {

namespace nt {

inline bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline bool is_prime(std::int64_t n) { return is_prime(mpz_class(static_cast<long>(n))); }

namespace detail {

// Brent's variant of Pollard rho; n must be odd and composite.
inline mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), primes ascending.
inline std::map<mpz_class, unsigned> factor(mpz_class n) {
  gassmann::detail::require_input(n != 0, "cannot factor zero");
  n = abs(n);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  // small factors dominate group orders; rho handles whatever is left
  for (unsigned long p = 7; p <= 100000 && mpz_class(p) * p <= n; p += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  detail::factor_into(n, out);
  return out;
}

/// Largest k with p^k | n (n != 0).
inline unsigned valuation(const mpz_class& n, const mpz_class& p) {
  gassmann::detail::require_input(n != 0, "valuation of zero");
  mpz_class m = abs(n);
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++k;
  }
  return k;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  gassmann::detail::require_input(r == 1, "element is not invertible modulo n");
  return mod(t, n);
}

/// Smallest generator of (Z/pZ)^x.
inline std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  auto fac = factor(mpz_class(static_cast<long>(p - 1)));
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : fac) {
      std::int64_t exp = (p - 1) / q.get_si();
      std::int64_t acc = 1;
      for (std::int64_t i = 0; i < exp; ++i) acc = acc * g % p;
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

/// Legendre symbol (a/p) for odd prime p, a coprime to p.
inline int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  std::int64_t acc = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  if (acc == 0) return 0;
  return acc == 1 ? 1 : -1;
}

}  // namespace nt

}  // namespace gassmann
