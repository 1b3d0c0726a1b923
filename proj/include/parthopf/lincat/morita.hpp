#pragma once

#include <array>
#include <functional>
#include <string>

#include "parthopf/lincat/semicategory.hpp"

namespace parthopf {

/// Morita sextuple (A, B, M, N, tau, sigma) on coordinate spaces.
///
/// M is an A-B bimodule, N a B-A bimodule. The four actions and both
/// pairings are bilinear maps stored as tensors:
///   a_m: A x M -> M   m_b: M x B -> M   b_n: B x N -> N   n_a: N x A -> N
///   tau: M x N -> A   sigma: N x M -> B
/// Balance over the middle algebra is a checked invariant rather than a
/// quotient construction.
struct MoritaContext {
  Algebra A;
  Algebra B;
  std::size_t dim_m = 0;
  std::size_t dim_n = 0;
  Tensor3 a_m, m_b, b_n, n_a;
  Tensor3 tau, sigma;

  Field field() const { return A.field; }

  /// Zero bimodules and pairings of the given sizes.
  static MoritaContext zero(const Algebra& a, const Algebra& b, std::size_t m, std::size_t n) {
    const Field F = a.field;
    return MoritaContext{a, b, m, n,
                         Tensor3(F, a.dim(), m, m), Tensor3(F, m, b.dim(), m),
                         Tensor3(F, b.dim(), n, n), Tensor3(F, n, a.dim(), n),
                         Tensor3(F, m, n, a.dim()), Tensor3(F, n, m, b.dim())};
  }
};

namespace detail {

inline void check_context_shapes(const MoritaContext& c) {
  const std::size_t a = c.A.dim(), b = c.B.dim(), m = c.dim_m, n = c.dim_n;
  auto is = [](const Tensor3& t, std::size_t i, std::size_t j, std::size_t k) {
    return t.dim(0) == i && t.dim(1) == j && t.dim(2) == k;
  };
  if (!is(c.a_m, a, m, m) || !is(c.m_b, m, b, m) || !is(c.b_n, b, n, n) || !is(c.n_a, n, a, n) ||
      !is(c.tau, m, n, a) || !is(c.sigma, n, m, b)) {
    throw StructuralError("Morita context tensors do not match the declared dimensions");
  }
}

inline Vec basis_fiber(const Tensor3& t, std::size_t i, std::size_t j) {
  auto f = t.fiber(i, j);
  return {f.begin(), f.end()};
}

/// dim of the balanced tensor product U (x)_R V: dim U * dim V minus the rank
/// of the relations u r (x) v - u (x) r v.
inline std::size_t balanced_dim(const Field F, std::size_t du, std::size_t dv, std::size_t dr, const Tensor3& u_r,
                                const Tensor3& r_v) {
  std::vector<Vec> relations;
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < dr; ++r)
      for (std::size_t j = 0; j < dv; ++j) {
        Vec rel = zero_vec(F, du * dv);
        auto ur = u_r.fiber(i, r);
        for (std::size_t p = 0; p < du; ++p) rel[p * dv + j] += ur[p];
        auto rv = r_v.fiber(r, j);
        for (std::size_t q = 0; q < dv; ++q) rel[i * dv + q] -= rv[q];
        relations.push_back(rel);
      }
  return du * dv - Subspace(F, du * dv, relations).dim();
}

}  // namespace detail

/// The unit of an algebra found by solving u b_i = b_i = b_i u, if one exists.
inline std::optional<Vec> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Vec{};
  // Unknown u; equations sum_k u_k mult(k, i, .) = e_i and sum_k u_k mult(i, k, .) = e_i.
  Matrix m(a.field, 2 * n * n, n);
  Matrix rhs(a.field, 2 * n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row_l = i * n + c;
      const std::size_t row_r = n * n + i * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        m(row_l, k) = a.mult(k, i, c);
        m(row_r, k) = a.mult(i, k, c);
      }
      if (i == c) {
        rhs(row_l, 0) = Scalar::one(a.field);
        rhs(row_r, 0) = Scalar::one(a.field);
      }
    }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->column(0);
}

/// Module and pairing axioms of the context, ending with the associativity
/// conditions
///   tau(m1, n) m2 = m1 sigma(n, m2),   sigma(n1, m) n2 = n1 tau(m, n2).
inline Report verify_morita_context(const MoritaContext& c) {
  detail::check_context_shapes(c);
  const std::size_t dm = c.dim_m, dn = c.dim_n;
  Report r("morita context");
  r.merge("A", verify_algebra(c.A));
  r.merge("B", verify_algebra(c.B));

  const Field F = c.field();
  const SparseFibers A(c.A.mult), B(c.B.mult), am(c.a_m), mb(c.m_b), bn(c.b_n), na(c.n_a), tau(c.tau),
      sigma(c.sigma);
  // lo(li(i, j), k) == ro(i, ri(j, k)) on basis triples
  auto check = [&](const char* name, const SparseFibers& li, const SparseFibers& lo, const SparseFibers& ri,
                   const SparseFibers& ro) {
    auto t = first_bracketing_failure(li, lo, ri, ro, F);
    std::string w;
    if (t) w = "(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) + ")";
    r.record(name, w.empty(), w);
  };
  check("M-left-module", A, am, am, am);
  check("M-right-module", mb, mb, B, mb);
  check("M-bimodule", am, mb, mb, am);
  check("N-left-module", B, bn, bn, bn);
  check("N-right-module", na, na, A, na);
  check("N-bimodule", bn, na, na, bn);
  if (c.A.unit && c.B.unit) {
    auto em = [&](std::size_t i) { return unit_vec(F, dm, i); };
    auto en = [&](std::size_t i) { return unit_vec(F, dn, i); };
    std::string w;
    for (std::size_t i = 0; i < dm && w.empty(); ++i)
      if (c.a_m.contract(*c.A.unit, em(i)) != em(i) || c.m_b.contract(em(i), *c.B.unit) != em(i))
        w = "m" + std::to_string(i);
    for (std::size_t i = 0; i < dn && w.empty(); ++i)
      if (c.b_n.contract(*c.B.unit, en(i)) != en(i) || c.n_a.contract(en(i), *c.A.unit) != en(i))
        w = "n" + std::to_string(i);
    r.record("unital-modules", w.empty(), w);
  }
  auto both = [&](const char* name, auto first, auto second) {
    auto t = first_bracketing_failure(first[0], first[1], first[2], first[3], F);
    if (!t) t = first_bracketing_failure(second[0], second[1], second[2], second[3], F);
    std::string w;
    if (t) w = "(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]) + ")";
    r.record(name, w.empty(), w);
  };
  using Four = std::array<std::reference_wrapper<const SparseFibers>, 4>;
  both("tau-bilinear", Four{am, tau, tau, A}, Four{tau, A, na, tau});
  check("tau-balanced", mb, tau, bn, tau);
  both("sigma-bilinear", Four{bn, sigma, sigma, B}, Four{sigma, B, mb, sigma});
  check("sigma-balanced", na, sigma, am, sigma);
  check("associativity-M", tau, am, sigma, mb);
  check("associativity-N", sigma, bn, tau, na);
  return r;
}

/// Surjectivity and injectivity of both pairings on the balanced tensor
/// products.
struct PairingStatus {
  bool tau_surjective = false;
  bool sigma_surjective = false;
  bool tau_injective = false;
  bool sigma_injective = false;
};

inline PairingStatus pairing_status(const MoritaContext& c) {
  detail::check_context_shapes(c);
  const Field F = c.field();
  std::vector<Vec> tau_img;
  for (std::size_t i = 0; i < c.dim_m; ++i)
    for (std::size_t j = 0; j < c.dim_n; ++j) tau_img.push_back(detail::basis_fiber(c.tau, i, j));
  std::vector<Vec> sigma_img;
  for (std::size_t i = 0; i < c.dim_n; ++i)
    for (std::size_t j = 0; j < c.dim_m; ++j) sigma_img.push_back(detail::basis_fiber(c.sigma, i, j));
  const std::size_t rt = Subspace(F, c.A.dim(), tau_img).dim();
  const std::size_t rs = Subspace(F, c.B.dim(), sigma_img).dim();
  PairingStatus s;
  s.tau_surjective = rt == c.A.dim();
  s.sigma_surjective = rs == c.B.dim();
  s.tau_injective = detail::balanced_dim(F, c.dim_m, c.dim_n, c.B.dim(), c.m_b, c.b_n) == rt;
  s.sigma_injective = detail::balanced_dim(F, c.dim_n, c.dim_m, c.A.dim(), c.n_a, c.a_m) == rs;
  return s;
}

/// Block offsets of the linking algebra [[A, M], [N, B]].
struct LinkingLayout {
  std::size_t a = 0, m = 0, n = 0, b = 0, total = 0;
};

inline LinkingLayout linking_layout(const MoritaContext& c) {
  LinkingLayout l;
  l.a = 0;
  l.m = c.A.dim();
  l.n = l.m + c.dim_m;
  l.b = l.n + c.dim_n;
  l.total = l.b + c.B.dim();
  return l;
}

/// The linking algebra [[A, M], [N, B]] with
///   (a, m, n, b)(a', m', n', b') =
///   (aa' + tau(m, n'), am' + mb', na' + bn', sigma(n, m') + bb').
inline Algebra linking_algebra(const MoritaContext& c) {
  detail::check_context_shapes(c);
  const LinkingLayout l = linking_layout(c);
  const Field F = c.field();
  std::vector<std::string> names;
  for (const auto& s : c.A.basis) names.push_back("A:" + s);
  for (std::size_t i = 0; i < c.dim_m; ++i) names.push_back("M:" + std::to_string(i));
  for (std::size_t i = 0; i < c.dim_n; ++i) names.push_back("N:" + std::to_string(i));
  for (const auto& s : c.B.basis) names.push_back("B:" + s);
  Algebra out{F, names, Tensor3(F, l.total, l.total, l.total), std::nullopt};
  auto place = [&out](const Tensor3& t, std::size_t o0, std::size_t o1, std::size_t o2) {
    for (std::size_t i = 0; i < t.dim(0); ++i)
      for (std::size_t j = 0; j < t.dim(1); ++j)
        for (std::size_t k = 0; k < t.dim(2); ++k)
          if (!t(i, j, k).is_zero()) out.mult(o0 + i, o1 + j, o2 + k) += t(i, j, k);
  };
  place(c.A.mult, l.a, l.a, l.a);
  place(c.tau, l.m, l.n, l.a);
  place(c.a_m, l.a, l.m, l.m);
  place(c.m_b, l.m, l.b, l.m);
  place(c.n_a, l.n, l.a, l.n);
  place(c.b_n, l.b, l.n, l.n);
  place(c.sigma, l.n, l.m, l.b);
  place(c.B.mult, l.b, l.b, l.b);
  if (c.A.unit && c.B.unit) {
    Vec u = zero_vec(F, l.total);
    for (std::size_t i = 0; i < c.A.dim(); ++i) u[l.a + i] = (*c.A.unit)[i];
    for (std::size_t i = 0; i < c.B.dim(); ++i) u[l.b + i] = (*c.B.unit)[i];
    out.unit = u;
  }
  return out;
}

/// Two objects A (index 0) and B (index 1) with _AL_A = A, _BL_B = B,
/// _AL_B = M, _BL_A = N; m o n = tau(m, n) and n o m = sigma(n, m).
inline LinSemicat linking_semicategory(const MoritaContext& c) {
  Report check = verify_morita_context(c);
  if (!check.ok()) throw RejectedError("Morita context invalid: " + check.first_failure()->name);
  const std::size_t A = 0, B = 1;
  LinSemicat s(c.field(), {"A", "B"}, {{c.A.dim(), c.dim_m}, {c.dim_n, c.B.dim()}});
  s.comp(A, A, A) = c.A.mult;
  s.comp(B, B, B) = c.B.mult;
  s.comp(A, A, B) = c.a_m;
  s.comp(A, B, B) = c.m_b;
  s.comp(B, B, A) = c.b_n;
  s.comp(B, A, A) = c.n_a;
  s.comp(A, B, A) = c.tau;
  s.comp(B, A, B) = c.sigma;
  s.set_basis_names(A, A, c.A.basis);
  s.set_basis_names(B, B, c.B.basis);
  return s;
}

}  // namespace parthopf
