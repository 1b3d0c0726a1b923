#pragma once

#include <string>
#include <vector>

#include "parthopf/hopf/hopf_algebra.hpp"
#include "parthopf/lincat/semicategory.hpp"

namespace parthopf {

/// An H-action on the hom spaces of a (semi)category: act[y][x][i] is the
/// matrix of pi_{b_i} on _yC_x. Linear in h by extension from the basis.
/// Whether it is partial or global is a property checked by the verifiers.
struct HopfAction {
  LinSemicat cat;
  HopfAlgebra hopf;
  std::vector<std::vector<std::vector<Matrix>>> act;

  Field field() const { return cat.field(); }

  const Matrix& pi(std::size_t y, std::size_t x, std::size_t i) const { return act.at(y).at(x).at(i); }

  /// pi_h for an arbitrary coordinate vector h.
  Matrix pi_of(std::size_t y, std::size_t x, std::span<const Scalar> h) const {
    Matrix m(field(), cat.dim(y, x), cat.dim(y, x));
    for (std::size_t i = 0; i < hopf.dim(); ++i)
      if (!h[i].is_zero()) m = m + h[i] * pi(y, x, i);
    return m;
  }

  /// lambda^x_{b_i} = b_i . 1_x.
  Vec lambda(std::size_t x, std::size_t i) const { return pi(x, x, i).apply(cat.identity(x)); }

  void check_shapes() const {
    cat.check_shapes();
    if (cat.field() != hopf.field) throw StructuralError("category and Hopf algebra over different fields");
    const std::size_t n = cat.size();
    if (act.size() != n) throw StructuralError("action needs one block row per object");
    for (std::size_t y = 0; y < n; ++y) {
      if (act[y].size() != n) throw StructuralError("action needs one block per object pair");
      for (std::size_t x = 0; x < n; ++x) {
        if (act[y][x].size() != hopf.dim()) {
          throw StructuralError("action at " + cat.object(y) + "|" + cat.object(x) +
                                " needs one matrix per Hopf basis element");
        }
        for (const auto& m : act[y][x]) {
          if (m.rows() != cat.dim(y, x) || m.cols() != cat.dim(y, x)) {
            throw StructuralError("action matrix at " + cat.object(y) + "|" + cat.object(x) + " has the wrong shape");
          }
        }
      }
    }
  }
};

using PartialAction = HopfAction;

/// Result of the partial-action verifier: the axiom report plus whether the
/// action is global (lambda^x_h = eps(h) 1_x everywhere).
struct ActionVerdict {
  Report report;
  bool global = false;

  bool ok() const { return report.ok(); }
};

namespace detail {

/// pi_{b_i b_j} on every hom pair, indexed [y][x][i * dim + j].
inline std::vector<std::vector<std::vector<Matrix>>> product_actions(const HopfAction& pa) {
  const std::size_t n = pa.cat.size();
  const std::size_t d = pa.hopf.dim();
  std::vector<std::vector<std::vector<Matrix>>> out(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[y][x].push_back(pa.pi_of(y, x, pa.hopf.basis_product(i, j)));
  return out;
}

inline std::string action_witness(const HopfAction& pa, std::size_t h, std::size_t k, std::string detail) {
  std::string w = "h=" + pa.hopf.basis[h];
  if (k != static_cast<std::size_t>(-1)) w += " k=" + pa.hopf.basis[k];
  return w + " " + detail;
}

inline Report unit_axiom(const HopfAction& pa) {
  Report r;
  std::string w;
  const std::size_t n = pa.cat.size();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (pa.pi_of(y, x, pa.hopf.unit) != Matrix::identity(pa.field(), pa.cat.dim(y, x)))
        w = "1_H acts non-trivially on " + pa.cat.object(y) + "|" + pa.cat.object(x);
  r.record("H1", w.empty(), w);
  return r;
}

/// h.(f o g) = sum (h1.f) o (h2.g) on all basis data.
inline Report multiplicativity_axiom(const HopfAction& pa) {
  Report r;
  const std::size_t n = pa.cat.size();
  const Field F = pa.field();
  const LinSemicat& c = pa.cat;
  std::string w;
  for (std::size_t l = 0; l < pa.hopf.dim() && w.empty(); ++l) {
    auto terms = pa.hopf.coproduct_terms(l);
    for (std::size_t z = 0; z < n && w.empty(); ++z)
      for (std::size_t y = 0; y < n && w.empty(); ++y)
        for (std::size_t x = 0; x < n && w.empty(); ++x)
          for (std::size_t a = 0; a < c.dim(z, y) && w.empty(); ++a) {
            Vec f = unit_vec(F, c.dim(z, y), a);
            for (std::size_t b = 0; b < c.dim(y, x) && w.empty(); ++b) {
              Vec g = unit_vec(F, c.dim(y, x), b);
              Vec lhs = pa.pi(z, x, l).apply(c.compose(z, y, x, f, g));
              Vec rhs = zero_vec(F, c.dim(z, x));
              for (auto [i, j, coeff] : terms)
                axpy(rhs, coeff, c.compose(z, y, x, pa.pi(z, y, i).apply(f), pa.pi(y, x, j).apply(g)));
              if (lhs != rhs) {
                w = action_witness(pa, l, static_cast<std::size_t>(-1),
                                   "f=" + c.basis_names(z, y)[a] + " g=" + c.basis_names(y, x)[b] + " objects " +
                                       c.object(z) + "," + c.object(y) + "," + c.object(x));
              }
            }
          }
  }
  r.record("H2", w.empty(), w);
  return r;
}

}  // namespace detail

/// Every axiom of a partial H-module category:
///   H1  1_H . f = f
///   H2  h.(f o g) = sum (h1.f) o (h2.g)
///   H3  h.(k.f) = sum (h1.1_y) o ((h2 k).f) = sum ((h1 k).f) o (h2.1_x), both sides checked
/// plus the derived identity h.(f o (k.g)) = sum (h1.f) o ((h2 k).g) as a
/// redundancy check, and the global flag.
inline ActionVerdict verify_partial_action(const HopfAction& pa) {
  pa.check_shapes();
  if (!pa.cat.is_category()) throw RejectedError("partial actions are defined on categories; identities missing");
  const LinSemicat& c = pa.cat;
  const std::size_t n = c.size();
  const std::size_t d = pa.hopf.dim();
  const Field F = pa.field();
  ActionVerdict v;
  v.report = Report("partial action");
  v.report.merge("", detail::unit_axiom(pa));
  v.report.merge("", detail::multiplicativity_axiom(pa));

  auto prod = detail::product_actions(pa);
  std::vector<std::vector<Vec>> lambda(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) lambda[x].push_back(pa.lambda(x, i));

  std::string wl;
  std::string wr;
  for (std::size_t l = 0; l < d; ++l) {
    auto terms = pa.hopf.coproduct_terms(l);
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
          if (!wl.empty() && !wr.empty()) break;
          for (std::size_t a = 0; a < c.dim(y, x); ++a) {
            Vec f = unit_vec(F, c.dim(y, x), a);
            Vec lhs = pa.pi(y, x, l).apply(pa.pi(y, x, m).apply(f));
            Vec left = zero_vec(F, c.dim(y, x));
            Vec right = zero_vec(F, c.dim(y, x));
            for (auto [i, j, coeff] : terms) {
              axpy(left, coeff, c.compose(y, y, x, lambda[y][i], prod[y][x][j * d + m].apply(f)));
              axpy(right, coeff, c.compose(y, x, x, prod[y][x][i * d + m].apply(f), lambda[x][j]));
            }
            const std::string where = "f=" + c.basis_names(y, x)[a];
            if (wl.empty() && lhs != left) wl = detail::action_witness(pa, l, m, where);
            if (wr.empty() && lhs != right) wr = detail::action_witness(pa, l, m, where);
          }
        }
  }
  v.report.record("H3-left", wl.empty(), wl);
  v.report.record("H3-right", wr.empty(), wr);

  std::string wu;
  for (std::size_t l = 0; l < d && wu.empty(); ++l) {
    auto terms = pa.hopf.coproduct_terms(l);
    for (std::size_t m = 0; m < d && wu.empty(); ++m)
      for (std::size_t z = 0; z < n && wu.empty(); ++z)
        for (std::size_t y = 0; y < n && wu.empty(); ++y)
          for (std::size_t x = 0; x < n && wu.empty(); ++x)
            for (std::size_t a = 0; a < c.dim(z, y) && wu.empty(); ++a) {
              Vec f = unit_vec(F, c.dim(z, y), a);
              for (std::size_t b = 0; b < c.dim(y, x) && wu.empty(); ++b) {
                Vec g = unit_vec(F, c.dim(y, x), b);
                Vec lhs = pa.pi(z, x, l).apply(c.compose(z, y, x, f, pa.pi(y, x, m).apply(g)));
                Vec rhs = zero_vec(F, c.dim(z, x));
                for (auto [i, j, coeff] : terms)
                  axpy(rhs, coeff, c.compose(z, y, x, pa.pi(z, y, i).apply(f), prod[y][x][j * d + m].apply(g)));
                if (lhs != rhs) {
                  wu = detail::action_witness(pa, l, m,
                                              "f=" + c.basis_names(z, y)[a] + " g=" + c.basis_names(y, x)[b]);
                }
              }
            }
  }
  v.report.record("useful", wu.empty(), wu);

  v.global = true;
  for (std::size_t x = 0; x < n && v.global; ++x)
    for (std::size_t i = 0; i < d && v.global; ++i)
      if (lambda[x][i] != scaled(pa.hopf.counit[i], c.identity(x))) v.global = false;
  return v;
}

/// Axioms of a global H-module semicategory: H1, H2, h.(k.f) = (hk).f, and
/// H4 h.1_x = eps(h) 1_x when identities exist.
inline Report verify_global_action(const HopfAction& ga) {
  ga.check_shapes();
  const LinSemicat& c = ga.cat;
  const std::size_t n = c.size();
  const std::size_t d = ga.hopf.dim();
  Report r("global action");
  r.merge("", detail::unit_axiom(ga));
  r.merge("", detail::multiplicativity_axiom(ga));
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t l = 0; l < d && w.empty(); ++l)
        for (std::size_t m = 0; m < d && w.empty(); ++m)
          if (ga.pi(y, x, l) * ga.pi(y, x, m) != ga.pi_of(y, x, ga.hopf.basis_product(l, m)))
            w = detail::action_witness(ga, l, m, "on " + c.object(y) + "|" + c.object(x));
  r.record("H3", w.empty(), w);
  if (c.is_category()) {
    w.clear();
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t i = 0; i < d && w.empty(); ++i)
        if (ga.lambda(x, i) != scaled(ga.hopf.counit[i], c.identity(x)))
          w = ga.hopf.basis[i] + " . 1_" + c.object(x) + " != eps(" + ga.hopf.basis[i] + ") 1_" + c.object(x);
    r.record("H4", w.empty(), w);
  }
  return r;
}

/// h.f = eps(h) f on every hom space.
inline HopfAction trivial_action(const LinSemicat& c, const HopfAlgebra& h) {
  HopfAction pa{c, h, {}};
  const std::size_t n = c.size();
  pa.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < h.dim(); ++i)
        pa.act[y][x].push_back(h.counit[i] * Matrix::identity(c.field(), c.dim(y, x)));
  return pa;
}

/// Lambda^x as a map H -> _xC_x (column i = lambda^x_{b_i}), the conditions
/// (a) Lambda(1) = 1_x, (b) Lambda = Lambda * Lambda,
/// (c) Lambda(h)Lambda(k) = sum Lambda(h1)Lambda(h2 k) = sum Lambda(h1 k)Lambda(h2),
/// and whether each Lambda^x takes scalar values (the action is induced by k).
struct LambdaData {
  std::vector<Matrix> Lambda;
  std::vector<bool> induced_by_k_at;
  bool induced_by_k = true;
  Report conditions;
};

inline LambdaData lambda_of(const HopfAction& pa) {
  pa.check_shapes();
  const LinSemicat& c = pa.cat;
  const std::size_t d = pa.hopf.dim();
  const Field F = pa.field();
  LambdaData out;
  out.conditions = Report("lambda");
  std::string wa, wb, wc;
  for (std::size_t x = 0; x < c.size(); ++x) {
    Matrix L(F, c.dim(x, x), d);
    for (std::size_t i = 0; i < d; ++i) L.set_column(i, pa.lambda(x, i));
    auto mul = [&](std::span<const Scalar> u, std::span<const Scalar> v) { return c.compose(x, x, x, u, v); };
    if (wa.empty() && L.apply(pa.hopf.unit) != c.identity(x)) wa = "Lambda^" + c.object(x) + "(1_H)";
    for (std::size_t l = 0; l < d; ++l) {
      auto terms = pa.hopf.coproduct_terms(l);
      Vec conv = zero_vec(F, c.dim(x, x));
      for (auto [i, j, coeff] : terms) axpy(conv, coeff, mul(L.column(i), L.column(j)));
      if (wb.empty() && conv != L.column(l)) wb = "Lambda^" + c.object(x) + " at " + pa.hopf.basis[l];
      for (std::size_t m = 0; m < d && wc.empty(); ++m) {
        Vec lhs = mul(L.column(l), L.column(m));
        Vec first = zero_vec(F, c.dim(x, x));
        Vec second = zero_vec(F, c.dim(x, x));
        for (auto [i, j, coeff] : terms) {
          axpy(first, coeff, mul(L.column(i), L.apply(pa.hopf.basis_product(j, m))));
          axpy(second, coeff, mul(L.apply(pa.hopf.basis_product(i, m)), L.column(j)));
        }
        if (lhs != first || lhs != second)
          wc = "Lambda^" + c.object(x) + " at h=" + pa.hopf.basis[l] + " k=" + pa.hopf.basis[m];
      }
    }
    bool scalar = true;
    for (std::size_t i = 0; i < d && scalar; ++i) {
      Vec col = L.column(i);
      scalar = is_zero(col) || Subspace(F, col.size(), std::vector<Vec>{c.identity(x)}).contains(col);
    }
    out.induced_by_k_at.push_back(scalar);
    out.induced_by_k = out.induced_by_k && scalar;
    out.Lambda.push_back(std::move(L));
  }
  out.conditions.record("a", wa.empty(), wa);
  out.conditions.record("b", wb.empty(), wb);
  out.conditions.record("c", wc.empty(), wc);
  return out;
}

/// Restriction of a global action to the ideal of a central idempotent e:
/// h.f = e_y o (h |> f) on the ideal category with identities e_x.
inline HopfAction restrict_global(const HopfAction& global, const CentralIdempotent& e) {
  Report g = verify_global_action(global);
  if (!g.ok()) throw RejectedError("action is not global: " + g.first_failure()->name);
  Report ce = verify_central_idempotent(global.cat, e);
  if (!ce.ok()) throw RejectedError("not a central idempotent: " + ce.first_failure()->witness);
  const LinSemicat& c = global.cat;
  CatIdeal ideal = ideal_of_idempotent(c, e);
  HopfAction out{ideal_category(c, e, ideal), global.hopf, {}};
  const std::size_t n = c.size();
  out.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Subspace& s = ideal.hom[y][x];
      for (std::size_t i = 0; i < global.hopf.dim(); ++i) {
        Matrix m(c.field(), s.dim(), s.dim());
        for (std::size_t a = 0; a < s.dim(); ++a) {
          Vec img = c.compose(y, y, x, e[y], global.pi(y, x, i).apply(s.basis()[a]));
          auto coords = s.coordinates(img);
          if (!coords) throw StructuralError("restricted action leaves the ideal");
          m.set_column(a, *coords);
        }
        out.act[y][x].push_back(std::move(m));
      }
    }
  return out;
}

/// h.(a (x) b) = sum (h1.a) (x) (h2.b) on tensor_categories(A, B), for
/// cocommutative H.
inline HopfAction tensor_actions(const HopfAction& pa, const HopfAction& pb) {
  if (!same_structure(pa.hopf, pb.hopf)) throw RejectedError("tensor of actions needs the same Hopf algebra");
  if (!is_cocommutative(pa.hopf)) throw RejectedError("tensor of partial actions needs a cocommutative Hopf algebra");
  pa.check_shapes();
  pb.check_shapes();
  HopfAction out{tensor_categories(pa.cat, pb.cat), pa.hopf, {}};
  const std::size_t nb = pb.cat.size();
  const std::size_t n = out.cat.size();
  out.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t l = 0; l < pa.hopf.dim(); ++l) {
        Matrix m(out.field(), out.cat.dim(y, x), out.cat.dim(y, x));
        for (auto [i, j, coeff] : pa.hopf.coproduct_terms(l))
          m = m + coeff * kron(pa.pi(y / nb, x / nb, i), pb.pi(y % nb, x % nb, j));
        out.act[y][x].push_back(std::move(m));
      }
  return out;
}

}  // namespace parthopf
