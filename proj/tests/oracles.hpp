#pragma once

#include <random>
#include <set>
#include <vector>

#include "parthopf/parthopf.hpp"

namespace oracle {

using namespace parthopf;

/// Every subset of G closed under products (finite, so closed under
/// inverses), by brute force over bitmasks.
inline std::set<std::vector<Index>> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Index>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a)
      for (Index b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    if (!closed) continue;
    std::vector<Index> s;
    for (Index a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    out.insert(s);
  }
  return out;
}

/// (a') sum lambda_g = 1, (b') lambda_g = sum_h lambda_{gh^-1} lambda_h,
/// (c') lambda_h lambda_g = lambda_{hg^-1} lambda_g = lambda_{g^-1 h} lambda_g.
inline bool dual_conditions(const FiniteGroup& g, const std::vector<Scalar>& l) {
  const Field F = l[0].field();
  Scalar sum = Scalar::zero(F);
  for (const auto& v : l) sum += v;
  if (sum != Scalar::one(F)) return false;
  for (Index a = 0; a < g.order(); ++a) {
    Scalar conv = Scalar::zero(F);
    for (Index h = 0; h < g.order(); ++h) conv += l[g.mul(a, g.inv(h))] * l[h];
    if (conv != l[a]) return false;
  }
  for (Index h = 0; h < g.order(); ++h)
    for (Index a = 0; a < g.order(); ++a) {
      if (l[h] * l[a] != l[g.mul(h, g.inv(a))] * l[a]) return false;
      if (l[h] * l[a] != l[g.mul(g.inv(a), h)] * l[a]) return false;
    }
  return true;
}

/// (1) lambda_e = 1, (2) lambda_g = lambda_g^2, (3) lambda_g lambda_h = lambda_g lambda_gh.
inline bool group_algebra_conditions(const FiniteGroup& g, const std::vector<Scalar>& l) {
  if (l[g.identity()] != Scalar::one(l[0].field())) return false;
  for (Index a = 0; a < g.order(); ++a) {
    if (l[a] != l[a] * l[a]) return false;
    for (Index b = 0; b < g.order(); ++b)
      if (l[a] * l[b] != l[a] * l[g.mul(a, b)]) return false;
  }
  return true;
}

/// Constant-on-support candidates lambda = c on S, 0 elsewhere, for every
/// nonempty S and the given value rule; returns those passing cond.
template <typename Cond, typename Value>
std::vector<std::vector<Index>> constant_on_support_solutions(const FiniteGroup& g, Field f, Value value, Cond cond) {
  std::vector<std::vector<Index>> out;
  for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
    std::vector<Index> s;
    for (Index a = 0; a < g.order(); ++a)
      if (mask >> a & 1) s.push_back(a);
    std::vector<Scalar> l(g.order(), Scalar::zero(f));
    for (Index a : s) l[a] = value(s.size());
    if (cond(g, l)) out.push_back(s);
  }
  return out;
}

/// dim span{ sum lambda(h1) h2 : h } for the action of H on k given by lambda;
/// this is the dimension of the underline smash of a one-object k.
inline std::size_t point_smash_dim(const HopfAlgebra& h, const Vec& lambda) {
  std::vector<Vec> gens;
  for (std::size_t l = 0; l < h.dim(); ++l) {
    Vec v = zero_vec(h.field, h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = 0; j < h.dim(); ++j) v[j] += h.comult(l, i, j) * lambda[i];
    gens.push_back(v);
  }
  return rank(Matrix::from_columns(h.field, h.dim(), gens));
}

/// A single structure constant moved to a different value.
struct Mutation {
  int target;  // 0 mult, 1 comult, 2 unit, 3 counit, 4 antipode
  std::size_t i, j, k;
};

inline HopfAlgebra mutate(const HopfAlgebra& h, std::mt19937& rng, Mutation* record = nullptr) {
  HopfAlgebra m = h;
  const std::size_t n = h.dim();
  std::uniform_int_distribution<int> which(0, 4);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> bump(1, 5);
  Mutation mu{which(rng), idx(rng), idx(rng), idx(rng)};
  const Scalar delta(h.field, bump(rng));
  switch (mu.target) {
    case 0: m.mult(mu.i, mu.j, mu.k) += delta; break;
    case 1: m.comult(mu.i, mu.j, mu.k) += delta; break;
    case 2: m.unit[mu.i] += delta; break;
    case 3: m.counit[mu.i] += delta; break;
    default: m.antipode(mu.i, mu.j) += delta; break;
  }
  if (record) *record = mu;
  return m;
}

}  // namespace oracle
