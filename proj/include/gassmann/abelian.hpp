#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/number_theory.hpp"

namespace gassmann {

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank x Z/d1 x ... x Z/dk with d1 | d2 | ... | dk, every di >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  /// Normalize an arbitrary list of cyclic orders (entries 1 are dropped,
  /// 0 counts as a free summand) into invariant-factor form.
  static AbelianInvariants from_cyclic(std::size_t free_rank, const std::vector<mpz_class>& orders) {
    std::map<mpz_class, std::vector<unsigned>> primary;
    for (const auto& n : orders) {
      if (n == 0) {
        ++free_rank;
        continue;
      }
      for (const auto& [p, e] : nt::factor(n)) primary[p].push_back(e);
    }
    return from_primary(free_rank, primary);
  }

  /// Same as from_cyclic, but entries are taken as-is when they already form
  /// a divisibility chain (the usual output of a Smith form).
  static AbelianInvariants from_diagonal(std::size_t free_rank, const std::vector<mpz_class>& diag) {
    std::vector<mpz_class> t;
    bool chain = true;
    for (const auto& d : diag) {
      if (d == 0 || d < 0) {
        chain = false;
        break;
      }
      if (!t.empty() && !mpz_divisible_p(d.get_mpz_t(), t.back().get_mpz_t())) chain = false;
      if (d != 1) t.push_back(d);
    }
    if (!chain) return from_cyclic(free_rank, diag);
    return AbelianInvariants{free_rank, std::move(t)};
  }

  static AbelianInvariants from_primary(std::size_t free_rank,
                                        const std::map<mpz_class, std::vector<unsigned>>& primary) {
    std::size_t len = 0;
    for (const auto& [p, es] : primary) len = std::max(len, es.size());
    std::vector<mpz_class> t(len, 1);
    for (const auto& [p, es0] : primary) {
      auto es = es0;
      std::sort(es.begin(), es.end());
      // largest exponents go to the largest invariant factors
      std::size_t offset = len - es.size();
      for (std::size_t i = 0; i < es.size(); ++i) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[i]);
        t[offset + i] *= pe;
      }
    }
    std::erase_if(t, [](const mpz_class& d) { return d == 1; });
    return AbelianInvariants{free_rank, std::move(t)};
  }

  [[nodiscard]] mpz_class torsion_order() const {
    mpz_class n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
  }

  /// Exponents e with C_{p^e} a summand of the p-primary part, ascending.
  [[nodiscard]] std::vector<unsigned> primary_part(const mpz_class& p) const {
    std::vector<unsigned> es;
    for (const auto& d : torsion) {
      unsigned e = nt::valuation(d, p);
      if (e) es.push_back(e);
    }
    return es;
  }

  /// Every prime dividing the torsion order, with its exponent multiset.
  [[nodiscard]] std::map<mpz_class, std::vector<unsigned>> primary_decomposition() const {
    std::map<mpz_class, std::vector<unsigned>> out;
    for (const auto& d : torsion)
      for (const auto& [p, e] : nt::factor(d)) out[p].push_back(e);
    for (auto& [p, es] : out) std::sort(es.begin(), es.end());
    return out;
  }

  /// "Z^14 x C2^2 x C4^12 x C8 x C3 ..." (primary form, primes ascending).
  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << " x ";
      first = false;
    };
    if (free_rank) {
      sep();
      os << "Z";
      if (free_rank > 1) os << '^' << free_rank;
    }
    for (const auto& [p, es] : primary_decomposition()) {
      std::map<unsigned, unsigned> mult;
      for (unsigned e : es) ++mult[e];
      for (const auto& [e, k] : mult) {
        sep();
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        os << 'C' << pe.get_str();
        if (k > 1) os << '^' << k;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

}  // namespace gassmann
