#pragma once

#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "parthopf/group/finite_group.hpp"
#include "parthopf/hopf/algebra.hpp"

namespace parthopf {

/// Finite-dimensional Hopf algebra carried entirely by structure constants.
///
///   mult(i, j, k)   coefficient of b_k in b_i b_j
///   comult(i, j, k) coefficient of b_j (x) b_k in Delta(b_i)
///   unit            coordinates of 1_H
///   counit[i]       epsilon(b_i)
///   antipode        column i holds S(b_i)
struct HopfAlgebra {
  Field field;
  std::vector<std::string> basis;
  Tensor3 mult;
  Vec unit;
  Tensor3 comult;
  Vec counit;
  Matrix antipode;

  std::size_t dim() const { return basis.size(); }

  Vec multiply(std::span<const Scalar> u, std::span<const Scalar> v) const { return mult.contract(u, v); }

  Vec basis_product(std::size_t i, std::size_t j) const {
    auto f = mult.fiber(i, j);
    return {f.begin(), f.end()};
  }

  /// Nonzero terms (j, k, c) of Delta(b_i) = sum c b_j (x) b_k.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> coproduct_terms(std::size_t i) const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!comult(i, j, k).is_zero()) out.emplace_back(j, k, comult(i, j, k));
    return out;
  }

  Scalar counit_of(std::span<const Scalar> v) const {
    Scalar s = Scalar::zero(field);
    for (std::size_t i = 0; i < dim(); ++i) s += counit[i] * v[i];
    return s;
  }

  Algebra as_algebra() const { return Algebra{field, basis, mult, unit}; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == name) return i;
    throw StructuralError("Hopf algebra has no basis element named '" + name + "'");
  }
};

namespace detail {

inline void check_hopf_shapes(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  auto cube = [n](const Tensor3& t) { return t.dim(0) == n && t.dim(1) == n && t.dim(2) == n; };
  if (!cube(h.mult) || !cube(h.comult) || h.unit.size() != n || h.counit.size() != n ||
      h.antipode.rows() != n || h.antipode.cols() != n) {
    throw StructuralError("Hopf algebra structure constants do not match dim = " + std::to_string(n));
  }
}

/// Delta applied to a vector, as an n*n coefficient vector indexed j*n + k.
inline Vec coproduct(const HopfAlgebra& h, std::span<const Scalar> v) {
  const std::size_t n = h.dim();
  Vec out = zero_vec(h.field, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!h.comult(i, j, k).is_zero()) out[j * n + k] += v[i] * h.comult(i, j, k);
  }
  return out;
}

}  // namespace detail

/// Every Hopf axiom on basis elements; each failing check names the first
/// violating basis multi-index.
inline Report verify_hopf(const HopfAlgebra& h) {
  detail::check_hopf_shapes(h);
  const std::size_t n = h.dim();
  const Field F = h.field;
  auto nm = [&](std::size_t i) { return basis_label(h.basis, i); };
  Report r("hopf");

  r.merge("", verify_algebra(h.as_algebra()));

  // (Delta (x) id) Delta = (id (x) Delta) Delta, compared on n^3 coefficients.
  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    std::vector<Scalar> left(n * n * n, Scalar::zero(F));
    std::vector<Scalar> right(n * n * n, Scalar::zero(F));
    for (auto [a, b, c] : h.coproduct_terms(i)) {
      for (auto [a1, a2, c1] : h.coproduct_terms(a))
        left[(a1 * n + a2) * n + b] += c * c1;
      for (auto [b1, b2, c2] : h.coproduct_terms(b))
        right[(a * n + b1) * n + b2] += c * c2;
    }
    if (left != right) w = "Delta(" + nm(i) + ")";
  }
  r.record("coassociativity", w.empty(), w);

  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    Vec left = zero_vec(F, n);
    Vec right = zero_vec(F, n);
    for (auto [a, b, c] : h.coproduct_terms(i)) {
      left[b] += c * h.counit[a];
      right[a] += c * h.counit[b];
    }
    Vec e = unit_vec(F, n, i);
    if (left != e) w = "(eps (x) id) Delta(" + nm(i) + ") = " + to_string(left);
    else if (right != e) w = "(id (x) eps) Delta(" + nm(i) + ") = " + to_string(right);
  }
  r.record("counit", w.empty(), w);

  // Delta(b_i b_j) = Delta(b_i) Delta(b_j) in H (x) H.
  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    for (std::size_t j = 0; j < n && w.empty(); ++j) {
      Vec lhs = detail::coproduct(h, h.basis_product(i, j));
      Vec rhs = zero_vec(F, n * n);
      for (auto [a, b, c] : h.coproduct_terms(i)) {
        for (auto [a2, b2, c2] : h.coproduct_terms(j)) {
          Scalar cc = c * c2;
          auto left = h.mult.fiber(a, a2);
          auto right = h.mult.fiber(b, b2);
          for (std::size_t p = 0; p < n; ++p) {
            if (left[p].is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
              if (!right[q].is_zero()) rhs[p * n + q] += cc * left[p] * right[q];
            }
          }
        }
      }
      if (lhs != rhs) w = "Delta(" + nm(i) + " " + nm(j) + ") != Delta(" + nm(i) + ") Delta(" + nm(j) + ")";
    }
  }
  r.record("comultiplication-multiplicative", w.empty(), w);

  Vec unit_unit = zero_vec(F, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) unit_unit[a * n + b] = h.unit[a] * h.unit[b];
  r.record("comultiplication-unital", detail::coproduct(h, h.unit) == unit_unit, "Delta(1) != 1 (x) 1");

  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      if (h.counit_of(h.basis_product(i, j)) != h.counit[i] * h.counit[j])
        w = "eps(" + nm(i) + " " + nm(j) + ") != eps(" + nm(i) + ") eps(" + nm(j) + ")";
  r.record("counit-multiplicative", w.empty(), w);
  r.record("counit-unital", h.counit_of(h.unit) == Scalar::one(F), "eps(1) != 1");

  // m (S (x) id) Delta = eta eps = m (id (x) S) Delta.
  std::string wl;
  std::string wr;
  for (std::size_t i = 0; i < n; ++i) {
    Vec left = zero_vec(F, n);
    Vec right = zero_vec(F, n);
    for (auto [a, b, c] : h.coproduct_terms(i)) {
      axpy(left, c, h.multiply(h.antipode.column(a), unit_vec(F, n, b)));
      axpy(right, c, h.multiply(unit_vec(F, n, a), h.antipode.column(b)));
    }
    Vec expect = scaled(h.counit[i], h.unit);
    if (wl.empty() && left != expect) wl = "S(" + nm(i) + "_(1)) " + nm(i) + "_(2) = " + to_string(left);
    if (wr.empty() && right != expect) wr = nm(i) + "_(1) S(" + nm(i) + "_(2)) = " + to_string(right);
  }
  r.record("antipode-left", wl.empty(), wl);
  r.record("antipode-right", wr.empty(), wr);
  return r;
}

/// tau o Delta = Delta on every basis element.
inline bool is_cocommutative(const HopfAlgebra& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (h.comult(i, j, k) != h.comult(i, k, j)) return false;
  return true;
}

/// kG on the basis delta_g: delta_g delta_h = delta_{gh}, Delta(delta_g) =
/// delta_g (x) delta_g, eps = 1, S(delta_g) = delta_{g^-1}.
inline HopfAlgebra build_group_algebra(const FiniteGroup& g, Field field = Field::rationals()) {
  const std::size_t n = g.order();
  HopfAlgebra h{field, {}, Tensor3(field, n, n, n), zero_vec(field, n), Tensor3(field, n, n, n),
                zero_vec(field, n), Matrix(field, n, n)};
  const Scalar one = Scalar::one(field);
  for (Index a = 0; a < n; ++a) {
    h.basis.push_back("d_" + g.name(a));
    for (Index b = 0; b < n; ++b) h.mult(a, b, g.mul(a, b)) = one;
    h.comult(a, a, a) = one;
    h.counit[a] = one;
    h.antipode(g.inv(a), a) = one;
  }
  h.unit[g.identity()] = one;
  return h;
}

/// k^G on the basis p_g of point functions: p_g p_h = delta_{g,h} p_g,
/// 1 = sum p_g, Delta(p_g) = sum_h p_{g h^-1} (x) p_h, eps(p_g) = delta_{g,e},
/// S(p_g) = p_{g^-1}.
inline HopfAlgebra build_dual_group_hopf(const FiniteGroup& g, Field field = Field::rationals()) {
  const std::size_t n = g.order();
  HopfAlgebra h{field, {}, Tensor3(field, n, n, n), zero_vec(field, n), Tensor3(field, n, n, n),
                zero_vec(field, n), Matrix(field, n, n)};
  const Scalar one = Scalar::one(field);
  for (Index a = 0; a < n; ++a) {
    h.basis.push_back("p_" + g.name(a));
    h.mult(a, a, a) = one;
    h.unit[a] = one;
    for (Index b = 0; b < n; ++b) h.comult(a, g.mul(a, g.inv(b)), b) = one;
    h.antipode(g.inv(a), a) = one;
  }
  h.counit[g.identity()] = one;
  return h;
}

/// Sweedler's 4-dimensional Hopf algebra on the basis e1 = (1+g)/2,
/// e2 = (1-g)/2, h1 = x e1, h2 = x e2 (index order e1, e2, h1, h2).
inline HopfAlgebra build_sweedler(Field field = Field::rationals()) {
  if (field.characteristic == 2) {
    throw UnsupportedFieldError("the Sweedler algebra basis e1 = (1+g)/2 needs char != 2");
  }
  const std::size_t n = 4;
  enum { E1 = 0, E2 = 1, H1 = 2, H2 = 3 };
  HopfAlgebra h{field, {"e1", "e2", "h1", "h2"}, Tensor3(field, n, n, n), zero_vec(field, n),
                Tensor3(field, n, n, n), zero_vec(field, n), Matrix(field, n, n)};
  const Scalar one = Scalar::one(field);
  const Scalar minus = -one;
  h.mult(E1, E1, E1) = one;
  h.mult(E2, E2, E2) = one;
  h.mult(E1, H2, H2) = one;
  h.mult(H2, E2, H2) = one;
  h.mult(E2, H1, H1) = one;
  h.mult(H1, E1, H1) = one;
  h.unit[E1] = one;
  h.unit[E2] = one;

  h.comult(E1, E1, E1) = one;
  h.comult(E1, E2, E2) = one;
  h.comult(E2, E1, E2) = one;
  h.comult(E2, E2, E1) = one;
  h.comult(H1, E1, H1) = one;
  h.comult(H1, E2, H2) = minus;
  h.comult(H1, H1, E1) = one;
  h.comult(H1, H2, E2) = one;
  h.comult(H2, E1, H2) = one;
  h.comult(H2, E2, H1) = minus;
  h.comult(H2, H1, E2) = one;
  h.comult(H2, H2, E1) = one;

  h.counit[E1] = one;

  h.antipode(E1, E1) = one;
  h.antipode(E2, E2) = one;
  h.antipode(H2, H1) = minus;  // S(h1) = -h2
  h.antipode(H1, H2) = one;    // S(h2) = h1
  return h;
}

/// H* on the dual basis b_i^*: multiplication is the transpose of Delta,
/// comultiplication the transpose of m, unit = eps, counit = 1, S* = S^T.
inline HopfAlgebra dualize(const HopfAlgebra& h) {
  detail::check_hopf_shapes(h);
  const std::size_t n = h.dim();
  HopfAlgebra d{h.field, {}, Tensor3(h.field, n, n, n), h.counit, Tensor3(h.field, n, n, n),
                h.unit, h.antipode.transpose()};
  for (const auto& b : h.basis) {
    d.basis.push_back(b.size() > 1 && b.back() == '*' ? b.substr(0, b.size() - 1) : b + "*");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.mult(i, j, k) = h.comult(k, i, j);
        d.comult(i, j, k) = h.mult(j, k, i);
      }
  return d;
}

/// Same structure constants (names are not compared).
inline bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.field == b.field && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode;
}

/// Convolution in Hom(H, U) induced by a bilinear V x W -> U.
/// f and g hold one column per Hopf basis element: column i is f(b_i).
/// (f * g)(b_l) = sum over Delta(b_l) of compose(f(b_(1)), g(b_(2))).
inline Matrix convolution_compose(const HopfAlgebra& h, const Matrix& f, const Matrix& g,
                                  const std::function<Vec(std::span<const Scalar>, std::span<const Scalar>)>& compose,
                                  std::size_t target_dim) {
  if (f.cols() != h.dim() || g.cols() != h.dim()) {
    throw StructuralError("convolution: maps must have one column per Hopf basis element");
  }
  Matrix out(h.field, target_dim, h.dim());
  for (std::size_t l = 0; l < h.dim(); ++l) {
    Vec acc = zero_vec(h.field, target_dim);
    for (auto [i, j, c] : h.coproduct_terms(l)) {
      Vec term = compose(f.column(i), g.column(j));
      if (term.size() != target_dim) throw StructuralError("convolution: compose returned wrong length");
      axpy(acc, c, term);
    }
    out.set_column(l, acc);
  }
  return out;
}

/// Convolution with the composition given as a structure tensor V x W -> U.
inline Matrix convolution_compose(const HopfAlgebra& h, const Matrix& f, const Matrix& g, const Tensor3& target_mult) {
  if (f.rows() != target_mult.dim(0) || g.rows() != target_mult.dim(1)) {
    throw StructuralError("convolution: map ranges do not match the composition tensor");
  }
  return convolution_compose(
      h, f, g, [&](std::span<const Scalar> u, std::span<const Scalar> v) { return target_mult.contract(u, v); },
      target_mult.dim(2));
}

/// eps(.) u as a map H -> V: the convolution unit when u is the unit of V.
inline Matrix counit_map(const HopfAlgebra& h, std::span<const Scalar> u) {
  Matrix m(h.field, u.size(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) m.set_column(i, scaled(h.counit[i], u));
  return m;
}

}  // namespace parthopf
