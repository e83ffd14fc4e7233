#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gassmann/error.hpp"
#include "gassmann/group/cosets.hpp"
#include "gassmann/group/finite_group.hpp"
#include "gassmann/linalg/matrix.hpp"
#include "gassmann/linalg/rational.hpp"

namespace gassmann {

/// Representation of a finite group on Q^dim, matrices acting on column
/// vectors: rho(gh) = rho(g) rho(h).
template <GroupModel M>
class RationalRep {
 public:
  using element_type = typename M::element_type;
  using Evaluator = std::function<RatMatrix(const element_type&)>;

  RationalRep(FiniteGroup<M> group, std::size_t dim, Evaluator eval, bool orthogonal, std::string name = {})
      : group_(std::move(group)), dim_(dim), eval_(std::move(eval)), orthogonal_(orthogonal), name_(std::move(name)) {
    for (const auto& g : group_.generators()) {
      RatMatrix m = eval_(g);
      detail::require_input(m.rows() == dim_ && m.cols() == dim_, "representation matrix has the wrong size");
      gens_.push_back(std::move(m));
    }
  }

  [[nodiscard]] const FiniteGroup<M>& group() const { return group_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<RatMatrix>& generator_matrices() const { return gens_; }
  /// True when every matrix is orthogonal, so the standard form is invariant.
  [[nodiscard]] bool is_orthogonal() const { return orthogonal_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] RatMatrix operator()(const element_type& x) const { return eval_(x); }
  [[nodiscard]] Rational character(const element_type& x) const {
    RatMatrix m = eval_(x);
    Rational t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += m(i, i);
    return t;
  }

 private:
  FiniteGroup<M> group_;
  std::size_t dim_;
  Evaluator eval_;
  bool orthogonal_;
  std::string name_;
  std::vector<RatMatrix> gens_;
};

inline constexpr std::size_t max_perm_rep_dim = 1000;

/// Q[G/U]: rho(g) has a 1 at (c, c.g).
template <GroupModel M>
RationalRep<M> perm_rep(const FiniteGroup<M>& g, const Subgroup<M>& u) {
  if (g.order() / u.order() > max_perm_rep_dim) throw ResourceError("permutation representation dimension exceeds 1000");
  auto table = std::make_shared<const CosetTable<M>>(g, u);
  const std::size_t m = table->size();
  auto eval = [table, m](const typename M::element_type& x) {
    RatMatrix r(m, m);
    for (std::size_t c = 0; c < m; ++c) r(c, table->act(c, x)) = 1;
    return r;
  };
  return RationalRep<M>(g, m, std::move(eval), true, "Q[G/" + u.name() + "]");
}

/// Ind_H^G psi for a character psi: H -> {+-1} given on H's generators.
/// rho(g) has psi(x_c g x_{c.g}^-1) at (c, c.g).
template <GroupModel M>
RationalRep<M> induced_sign_rep(const FiniteGroup<M>& g, const Subgroup<M>& h, const std::vector<int>& signs,
                                std::string name = {}) {
  using E = typename M::element_type;
  const auto& model = g.model();
  detail::require_input(signs.size() == h.generators().size(), "one sign per subgroup generator is required");
  for (int s : signs) detail::require_input(s == 1 || s == -1, "signs must be +1 or -1");
  if (g.order() / h.order() > max_perm_rep_dim) throw ResourceError("induced representation dimension exceeds 1000");

  // Extend psi along a spanning tree of the Cayley graph, then check every edge.
  auto psi = std::make_shared<std::unordered_map<E, int, typename M::hash>>();
  std::deque<E> queue{model.identity()};
  psi->emplace(model.identity(), 1);
  while (!queue.empty()) {
    E y = queue.front();
    queue.pop_front();
    const int py = psi->at(y);
    for (std::size_t i = 0; i < signs.size(); ++i) {
      E z = model.mul(y, h.generators()[i]);
      auto [it, fresh] = psi->emplace(z, py * signs[i]);
      if (fresh) queue.push_back(std::move(z));
      else detail::require_input(it->second == py * signs[i], "sign assignment is not a character of the subgroup");
    }
  }

  auto table = std::make_shared<const CosetTable<M>>(g, h);
  const std::size_t m = table->size();
  std::vector<E> rep_inv;
  for (std::size_t c = 0; c < m; ++c) rep_inv.push_back(model.inv(table->representative(c)));
  auto eval = [table, psi, model, rep_inv = std::move(rep_inv), m](const E& x) {
    RatMatrix r(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      const E y = model.mul(table->representative(c), x);
      const std::size_t d = table->index_of(y);
      r(c, d) = psi->at(model.mul(y, rep_inv[d]));
    }
    return r;
  };
  return RationalRep<M>(g, m, std::move(eval), true, name.empty() ? "Ind_" + h.name() : std::move(name));
}

/// Representation determined by generator matrices. Every edge of the
/// Cayley graph is checked, so a non-homomorphism is rejected.
template <GroupModel M>
RationalRep<M> rep_from_generator_matrices(const FiniteGroup<M>& g, std::vector<RatMatrix> mats, std::string name = {},
                                           std::uint64_t limit = 100'000) {
  using E = typename M::element_type;
  const auto& model = g.model();
  detail::require_input(mats.size() == g.generators().size(), "one matrix per group generator is required");
  detail::require_input(!mats.empty() || g.order() == 1, "a nontrivial group needs generator matrices");
  if (g.order() > limit) throw ResourceError("group too large to tabulate a representation");
  const std::size_t n = mats.empty() ? 0 : mats[0].rows();
  bool orthogonal = true;
  for (const auto& a : mats) {
    detail::require_input(a.rows() == n && a.cols() == n, "generator matrices must be square of one size");
    detail::require_input(inverse(a).has_value(), "generator matrix is singular");
    if (a.transpose() * a != RatMatrix::identity(n)) orthogonal = false;
  }
  auto table = std::make_shared<std::unordered_map<E, RatMatrix, typename M::hash>>();
  std::deque<E> queue{model.identity()};
  table->emplace(model.identity(), RatMatrix::identity(n));
  while (!queue.empty()) {
    E y = queue.front();
    queue.pop_front();
    const RatMatrix my = table->at(y);
    for (std::size_t i = 0; i < mats.size(); ++i) {
      E z = model.mul(y, g.generators()[i]);
      RatMatrix mz = my * mats[i];
      auto [it, fresh] = table->emplace(z, mz);
      if (fresh) queue.push_back(std::move(z));
      else detail::require_input(it->second == mz, "generator matrices do not define a representation");
    }
  }
  detail::require_input(table->size() == g.order(), "generator closure does not match the group order");
  auto eval = [table](const E& x) {
    auto it = table->find(x);
    detail::require_input(it != table->end(), "element is not in the group");
    return it->second;
  };
  return RationalRep<M>(g, n, std::move(eval), orthogonal, std::move(name));
}

/// One-dimensional representation from a multiplicative function.
template <GroupModel M>
RationalRep<M> character_rep(const FiniteGroup<M>& g, std::function<Rational(const typename M::element_type&)> chi,
                             std::string name = {}) {
  bool orthogonal = true;
  for (const auto& s : g.generators()) {
    const Rational v = chi(s);
    if (v * v != 1) orthogonal = false;
  }
  auto eval = [chi = std::move(chi)](const typename M::element_type& x) {
    RatMatrix r(1, 1);
    r(0, 0) = chi(x);
    return r;
  };
  return RationalRep<M>(g, 1, std::move(eval), orthogonal, std::move(name));
}

template <GroupModel M>
RationalRep<M> trivial_rep(const FiniteGroup<M>& g) {
  return character_rep<M>(g, [](const auto&) { return Rational(1); }, "triv");
}

template <GroupModel M>
RationalRep<M> direct_sum(const RationalRep<M>& a, const RationalRep<M>& b) {
  auto eval = [a, b](const typename M::element_type& x) { return block_diagonal(a(x), b(x)); };
  return RationalRep<M>(a.group(), a.dim() + b.dim(), std::move(eval), a.is_orthogonal() && b.is_orthogonal(),
                        a.name() + "+" + b.name());
}

/// x -> A^-1 rho(x) A, an isomorphic representation in another basis.
template <GroupModel M>
RationalRep<M> conjugated(const RationalRep<M>& rep, const RatMatrix& a) {
  auto ai = inverse(a);
  detail::require_input(ai.has_value(), "change of basis is singular");
  auto eval = [rep, a, ai = *ai](const typename M::element_type& x) { return ai * rep(x) * a; };
  RationalRep<M> probe(rep.group(), rep.dim(), eval, false, rep.name() + "^A");
  bool orthogonal = true;
  for (const auto& m : probe.generator_matrices())
    if (m.transpose() * m != RatMatrix::identity(rep.dim())) orthogonal = false;
  return RationalRep<M>(rep.group(), rep.dim(), std::move(eval), orthogonal, rep.name() + "^A");
}

}  // namespace gassmann
