#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parthopf/action/group_actions.hpp"

namespace parthopf {

/// Hom_k(H, C): the semicategory with hom spaces Hom(H, _yC_x), coordinate
/// i * dim _yC_x + j holding the j-th component of f(b_i), convolution
/// composition (f * g)(h) = sum f(h1) o g(h2) and the global action
/// (h |> f)(k) = f(kh). No identities.
inline HopfAction build_hom_category(const HopfAction& pa) {
  pa.check_shapes();
  const LinSemicat& c = pa.cat;
  const HopfAlgebra& H = pa.hopf;
  const std::size_t n = c.size();
  const std::size_t d = H.dim();
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) dims[y][x] = d * c.dim(y, x);
  HopfAction out{LinSemicat(c.field(), c.objects(), dims), H, {}};
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < d; ++i)
        for (const auto& f : c.basis_names(y, x)) names.push_back(H.basis[i] + "*(x)" + f);
      out.cat.set_basis_names(y, x, names);
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const Tensor3& t = c.comp(z, y, x);
        Tensor3& out_t = out.cat.comp(z, y, x);
        const std::size_t dzy = c.dim(z, y), dyx = c.dim(y, x), dzx = c.dim(z, x);
        for (std::size_t l = 0; l < d; ++l)
          for (auto [i, j, coeff] : H.coproduct_terms(l))
            for (std::size_t a = 0; a < dzy; ++a)
              for (std::size_t b = 0; b < dyx; ++b)
                for (std::size_t e = 0; e < dzx; ++e)
                  if (!t(a, b, e).is_zero()) out_t(i * dzy + a, j * dyx + b, l * dzx + e) += coeff * t(a, b, e);
      }
  out.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t m = c.dim(y, x);
      for (std::size_t s = 0; s < d; ++s) {
        // (b_s |> (phi_i (x) c_a))(b_k) = coefficient of b_i in b_k b_s, times c_a.
        Matrix act(c.field(), d * m, d * m);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t k = 0; k < d; ++k)
            if (!H.mult(k, s, i).is_zero())
              for (std::size_t a = 0; a < m; ++a) act(k * m + a, i * m + a) = H.mult(k, s, i);
        out.act[y][x].push_back(std::move(act));
      }
    }
  return out;
}

/// Restriction of an action to per-pair invariant subspaces, as an action on
/// the induced sub-semicategory.
inline HopfAction restrict_action(const HopfAction& a, const HomSubspaces& sub,
                                  const std::optional<std::vector<Vec>>& identities = std::nullopt) {
  const std::size_t n = a.cat.size();
  HopfAction out{induced_subsemicat(a.cat, sub, identities), a.hopf, {}};
  out.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < a.hopf.dim(); ++i) {
        const Subspace& s = sub[y][x];
        Matrix m(a.field(), s.dim(), s.dim());
        for (std::size_t b = 0; b < s.dim(); ++b) {
          auto coords = s.coordinates(a.pi(y, x, i).apply(s.basis()[b]));
          if (!coords) throw StructuralError("subspace is not invariant under " + a.hopf.basis[i]);
          m.set_column(b, *coords);
        }
        out.act[y][x].push_back(std::move(m));
      }
  return out;
}

/// A globalization (B, F): a global H-action on the semicategory B and a
/// matrix F[y][x]: _yC_x -> _yB_x per hom pair. For the standard
/// construction B sits inside Hom_k(H, C) and the ambient data is kept.
struct Globalization {
  HopfAction global;
  std::vector<std::vector<Matrix>> F;
  std::optional<HopfAction> hom;
  HomSubspaces sub;

  const LinSemicat& B() const { return global.cat; }

  /// e_x = F(1_x) in B coordinates.
  Vec idempotent(const LinSemicat& c, std::size_t x) const { return F[x][x].apply(c.identity(x)); }

  Semifunctor as_semifunctor() const {
    Semifunctor s;
    for (std::size_t x = 0; x < F.size(); ++x) s.object_map.push_back(x);
    s.map = F;
    return s;
  }
};

/// F(f)(h) = h.f and _yB_x = span{b_i |> F(c_j)}.
inline Globalization standard_globalization(const HopfAction& pa) {
  ActionVerdict v = verify_partial_action(pa);
  if (!v.ok()) throw RejectedError("not a partial action: " + v.report.first_failure()->name);
  HopfAction hom = build_hom_category(pa);
  const LinSemicat& c = pa.cat;
  const std::size_t n = c.size();
  const std::size_t d = pa.hopf.dim();
  std::vector<std::vector<Matrix>> ambient_F(n, std::vector<Matrix>(n));
  HomSubspaces sub(n, std::vector<Subspace>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t m = c.dim(y, x);
      Matrix f(c.field(), d * m, m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < m; ++j) f(i * m + j, a) = pa.pi(y, x, i)(j, a);
      std::vector<Vec> span;
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t a = 0; a < m; ++a) span.push_back(hom.pi(y, x, s).apply(f.column(a)));
      sub[y][x] = Subspace(c.field(), d * m, span);
      ambient_F[y][x] = std::move(f);
    }
  Globalization g{restrict_action(hom, sub), {}, hom, sub};
  g.F.assign(n, std::vector<Matrix>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Subspace& s = sub[y][x];
      Matrix m(c.field(), s.dim(), c.dim(y, x));
      for (std::size_t a = 0; a < c.dim(y, x); ++a) m.set_column(a, *s.coordinates(ambient_F[y][x].column(a)));
      g.F[y][x] = std::move(m);
    }
  return g;
}

namespace detail {

inline void check_globalization_shapes(const Globalization& g, const HopfAction& pa) {
  const std::size_t n = pa.cat.size();
  if (g.B().size() != n || g.F.size() != n) throw StructuralError("globalization has the wrong object count");
  if (!same_structure(g.global.hopf, pa.hopf)) throw StructuralError("globalization over a different Hopf algebra");
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (g.F[y][x].rows() != g.B().dim(y, x) || g.F[y][x].cols() != pa.cat.dim(y, x))
        throw StructuralError("F at " + pa.cat.object(y) + "|" + pa.cat.object(x) + " has the wrong shape");
}

}  // namespace detail

/// Items (a)-(d) of the definition:
///   (a) the action on B is global;
///   (b) F is a faithful semifunctor, e = {F(1_x)} is an idempotent central
///       against all of B, and F(C) = e_y B e_x;
///   (c) B = span{h |> F(f)};
///   (d) F(h.f) = e_y (h |> F(f)) = (h |> F(f)) e_x.
inline Report verify_globalization(const Globalization& g, const HopfAction& pa) {
  detail::check_globalization_shapes(g, pa);
  const LinSemicat& c = pa.cat;
  const LinSemicat& B = g.B();
  const std::size_t n = c.size();
  const std::size_t d = pa.hopf.dim();
  const Field F = c.field();
  Report r("globalization");
  Report ga = verify_global_action(g.global);
  r.record("a-global-action", ga.ok(), ga.ok() ? "" : ga.first_failure()->name + ": " + ga.first_failure()->witness);

  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (rank(g.F[y][x]) != c.dim(y, x)) w = "F has a kernel on " + c.object(y) + "|" + c.object(x);
  r.record("b-faithful", w.empty(), w);
  Report sf = verify_semifunctor(c, B, g.as_semifunctor());
  r.record("b-semifunctor", sf.passed("composition"), sf.ok() ? "" : sf.first_failure()->witness);

  std::vector<Vec> e;
  for (std::size_t x = 0; x < n; ++x) e.push_back(g.idempotent(c, x));
  w.clear();
  for (std::size_t x = 0; x < n && w.empty(); ++x)
    if (B.compose(x, x, x, e[x], e[x]) != e[x]) w = "F(1_" + c.object(x) + ") is not idempotent";
  r.record("b-idempotent", w.empty(), w);
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t b = 0; b < B.dim(y, x) && w.empty(); ++b) {
        Vec u = unit_vec(F, B.dim(y, x), b);
        if (B.compose(y, y, x, e[y], u) != B.compose(y, x, x, u, e[x]))
          w = "e_y u != u e_x for u = " + B.basis_names(y, x)[b];
      }
  r.record("b-central", w.empty(), w);
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      std::vector<Vec> image;
      for (std::size_t a = 0; a < c.dim(y, x); ++a) image.push_back(g.F[y][x].column(a));
      std::vector<Vec> cut;
      for (std::size_t b = 0; b < B.dim(y, x); ++b)
        cut.push_back(B.compose(y, y, x, e[y], B.compose(y, x, x, unit_vec(F, B.dim(y, x), b), e[x])));
      if (!(Subspace(F, B.dim(y, x), image) == Subspace(F, B.dim(y, x), cut)))
        w = "F(C) != e_y B e_x at " + c.object(y) + "|" + c.object(x);
    }
  r.record("b-ideal", w.empty(), w);

  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      std::vector<Vec> span;
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t a = 0; a < c.dim(y, x); ++a) span.push_back(g.global.pi(y, x, s).apply(g.F[y][x].column(a)));
      if (Subspace(F, B.dim(y, x), span).dim() != B.dim(y, x))
        w = "H |> F(C) is smaller than B at " + c.object(y) + "|" + c.object(x);
    }
  r.record("c-generated", w.empty(), w);

  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t s = 0; s < d && w.empty(); ++s)
        for (std::size_t a = 0; a < c.dim(y, x) && w.empty(); ++a) {
          Vec lhs = g.F[y][x].apply(pa.pi(y, x, s).apply(unit_vec(F, c.dim(y, x), a)));
          Vec moved = g.global.pi(y, x, s).apply(g.F[y][x].column(a));
          if (lhs != B.compose(y, y, x, e[y], moved) || lhs != B.compose(y, x, x, moved, e[x]))
            w = "h=" + pa.hopf.basis[s] + " f=" + c.basis_names(y, x)[a];
        }
  r.record("d-intertwines", w.empty(), w);
  return r;
}

/// Item (e) as a kernel inclusion: every (h_i, f_j) combination with
/// sum (k h_i).f_j = 0 for all k also has sum h_i |> F(f_j) = 0.
inline Report verify_minimality(const Globalization& g, const HopfAction& pa) {
  detail::check_globalization_shapes(g, pa);
  const LinSemicat& c = pa.cat;
  const std::size_t n = c.size();
  const std::size_t d = pa.hopf.dim();
  const Field F = c.field();
  Report r("minimality");
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      const std::size_t m = c.dim(y, x);
      if (m == 0) continue;
      Matrix k1(F, d * d * m, d * m);
      Matrix k2(F, g.B().dim(y, x), d * m);
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Matrix> prods;
        for (std::size_t k = 0; k < d; ++k) prods.push_back(pa.pi_of(y, x, pa.hopf.basis_product(k, i)));
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t col = i * m + j;
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t t = 0; t < m; ++t) k1(k * m + t, col) = prods[k](t, j);
          k2.set_column(col, g.global.pi(y, x, i).apply(g.F[y][x].column(j)));
        }
      }
      for (const auto& v : kernel_basis(k1))
        if (!is_zero(k2.apply(v))) w = "kernel element escapes at " + c.object(y) + "|" + c.object(x);
    }
  r.record("e-minimal", w.empty(), w);
  return r;
}

/// The isomorphism Phi(sum h_i |> F(f_i)) = sum h_i |> G(f_i) between two
/// minimal globalizations and its inverse Psi, with the checks that make it
/// an isomorphism of H-module semicategories under F.
struct GlobalizationIso {
  std::vector<std::vector<Matrix>> phi;
  std::vector<std::vector<Matrix>> psi;
  Report report;
};

namespace detail {

/// Spanning family b_s |> F(c_a) of B as columns, ordered (s, a).
inline Matrix spanning_columns(const Globalization& g, const HopfAction& pa, std::size_t y, std::size_t x) {
  const std::size_t m = pa.cat.dim(y, x);
  const std::size_t d = pa.hopf.dim();
  Matrix s(pa.field(), g.B().dim(y, x), d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < m; ++a) s.set_column(i * m + a, g.global.pi(y, x, i).apply(g.F[y][x].column(a)));
  return s;
}

/// The linear map sending the columns of S to those of T, when it exists.
inline std::optional<Matrix> map_between_spans(const Matrix& S, const Matrix& T) {
  Echelon e = rref(S);
  const std::size_t r = e.pivots.size();
  if (r != S.rows()) return std::nullopt;
  Matrix sp(S.field(), S.rows(), r);
  Matrix tp(T.field(), T.rows(), r);
  for (std::size_t i = 0; i < r; ++i) {
    sp.set_column(i, S.column(e.pivots[i]));
    tp.set_column(i, T.column(e.pivots[i]));
  }
  auto inv = inverse(sp);
  if (!inv) return std::nullopt;
  Matrix phi = tp * *inv;
  if (!(phi * S == T)) return std::nullopt;
  return phi;
}

}  // namespace detail

inline GlobalizationIso globalization_iso(const HopfAction& pa, const Globalization& g1, const Globalization& g2) {
  for (const Globalization* g : {&g1, &g2}) {
    Report r = verify_globalization(*g, pa);
    Report m = verify_minimality(*g, pa);
    if (!r.ok() || !m.ok()) throw RejectedError("globalization_iso needs two verified minimal globalizations");
  }
  const std::size_t n = pa.cat.size();
  GlobalizationIso out;
  out.report = Report("globalization isomorphism");
  out.phi.assign(n, std::vector<Matrix>(n));
  out.psi.assign(n, std::vector<Matrix>(n));
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      Matrix s = detail::spanning_columns(g1, pa, y, x);
      Matrix t = detail::spanning_columns(g2, pa, y, x);
      auto phi = detail::map_between_spans(s, t);
      auto psi = detail::map_between_spans(t, s);
      if (!phi || !psi) {
        w = "not well defined at " + pa.cat.object(y) + "|" + pa.cat.object(x);
        break;
      }
      out.phi[y][x] = *phi;
      out.psi[y][x] = *psi;
    }
  out.report.record("well-defined", w.empty(), w);
  if (!w.empty()) return out;

  Semifunctor phi{{}, out.phi};
  Semifunctor psi{{}, out.psi};
  for (std::size_t x = 0; x < n; ++x) {
    phi.object_map.push_back(x);
    psi.object_map.push_back(x);
  }
  Report a = verify_semifunctor(g1.B(), g2.B(), phi);
  Report b = verify_semifunctor(g2.B(), g1.B(), psi);
  out.report.record("phi-semifunctor", a.passed("composition"), a.ok() ? "" : a.first_failure()->witness);
  out.report.record("psi-semifunctor", b.passed("composition"), b.ok() ? "" : b.first_failure()->witness);
  w.clear();
  std::string wi;
  std::string wf;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < pa.hopf.dim(); ++s)
        if (w.empty() && !(out.phi[y][x] * g1.global.pi(y, x, s) == g2.global.pi(y, x, s) * out.phi[y][x]))
          w = pa.hopf.basis[s] + " at " + pa.cat.object(y) + "|" + pa.cat.object(x);
      if (wi.empty() && (!(out.phi[y][x] * out.psi[y][x] == Matrix::identity(pa.field(), g2.B().dim(y, x))) ||
                         !(out.psi[y][x] * out.phi[y][x] == Matrix::identity(pa.field(), g1.B().dim(y, x)))))
        wi = "at " + pa.cat.object(y) + "|" + pa.cat.object(x);
      if (wf.empty() && !(out.phi[y][x] * g1.F[y][x] == g2.F[y][x])) wf = "at " + pa.cat.object(y) + "|" + pa.cat.object(x);
    }
  out.report.record("intertwines", w.empty(), w);
  out.report.record("mutually-inverse", wi.empty(), wi);
  out.report.record("compatible-with-F", wf.empty(), wf);
  return out;
}

/// The closed form for the k^G action on k supported on H: B = kH on the
/// basis delta_h (h in H, increasing index), p_g |> delta_s = [g = s] delta_s,
/// F(1) = e_H = (1/|H|) sum delta_h. embedding is the inclusion kH -> kG.
struct DualPointGlobalization {
  Globalization glob;
  Matrix embedding;
  Vec idempotent;
};

inline DualPointGlobalization dual_point_globalization(const FiniteGroup& G, const Subgroup& H,
                                                       Field field = Field::rationals()) {
  require_char_coprime(field, G.order());
  if (!G.is_subgroup(H.elements)) throw RejectedError("not a subgroup");
  const std::size_t m = H.order();
  const Scalar one = Scalar::one(field);
  Algebra kh{field, {}, Tensor3(field, m, m, m), zero_vec(field, m)};
  std::vector<std::size_t> pos(G.order(), m);
  for (std::size_t i = 0; i < m; ++i) {
    pos[H.elements[i]] = i;
    kh.basis.push_back("d_" + G.name(H.elements[i]));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) kh.mult(i, j, pos[G.mul(H.elements[i], H.elements[j])]) = one;
  (*kh.unit)[pos[G.identity()]] = one;
  HopfAction global{from_algebra(kh), build_dual_group_hopf(G, field), {}};
  global.act.assign(1, std::vector<std::vector<Matrix>>(1));
  for (Index g = 0; g < G.order(); ++g) {
    Matrix a(field, m, m);
    if (pos[g] < m) a(pos[g], pos[g]) = one;
    global.act[0][0].push_back(a);
  }
  DualPointGlobalization out{{global, {}, std::nullopt, {}}, Matrix(field, G.order(), m), zero_vec(field, m)};
  const Scalar w(field, 1L, static_cast<long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    out.idempotent[i] = w;
    out.embedding(H.elements[i], i) = one;
  }
  out.glob.F = {{Matrix::from_columns(field, m, {out.idempotent})}};
  return out;
}

}  // namespace parthopf
