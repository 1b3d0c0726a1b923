#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parthopf/global/globalization.hpp"
#include "parthopf/lincat/morita.hpp"

namespace parthopf {

/// A (x) H on the coordinates a * dim H + h with
///   (f (x) h) o (g (x) h') = sum f o (h1 . g) (x) h2 h'.
/// Carries no identities.
inline LinSemicat smash_tensor(const HopfAction& pa) {
  pa.check_shapes();
  const LinSemicat& c = pa.cat;
  const HopfAlgebra& H = pa.hopf;
  const std::size_t n = c.size();
  const std::size_t d = H.dim();
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) dims[y][x] = c.dim(y, x) * d;
  LinSemicat t(c.field(), c.objects(), dims);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::string> names;
      for (const auto& f : c.basis_names(y, x))
        for (const auto& h : H.basis) names.push_back(f + "(x)" + h);
      t.set_basis_names(y, x, names);
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t dzy = c.dim(z, y), dyx = c.dim(y, x), dzx = c.dim(z, x);
        if (dzy == 0 || dyx == 0 || dzx == 0) continue;
        Tensor3& out = t.comp(z, y, x);
        for (std::size_t h = 0; h < d; ++h)
          for (auto [i, j, coeff] : H.coproduct_terms(h)) {
            const Matrix& act = pa.pi(y, x, i);
            for (std::size_t a = 0; a < dzy; ++a)
              for (std::size_t b = 0; b < dyx; ++b) {
                // f_a o (b_i . g_b) in _zC_x
                Vec fg = c.compose(z, y, x, unit_vec(c.field(), dzy, a), act.column(b));
                if (is_zero(fg)) continue;
                for (std::size_t h2 = 0; h2 < d; ++h2)
                  for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& m = H.mult(j, h2, k);
                    if (m.is_zero()) continue;
                    const Scalar s = coeff * m;
                    for (std::size_t e = 0; e < dzx; ++e)
                      if (!fg[e].is_zero()) out(a * d + h, b * d + h2, e * d + k) += s * fg[e];
                  }
              }
          }
      }
  return t;
}

/// 1_x (x) 1_H in smash coordinates.
inline Vec smash_unit(const HopfAction& pa, std::size_t x) {
  const Vec& id = pa.cat.identity(x);
  const std::size_t d = pa.hopf.dim();
  Vec v = zero_vec(pa.field(), id.size() * d);
  for (std::size_t a = 0; a < id.size(); ++a)
    for (std::size_t h = 0; h < d; ++h) v[a * d + h] = id[a] * pa.hopf.unit[h];
  return v;
}

/// e = {1_x (x) 1_H} is a left unit of A (x) H.
inline Report smash_left_unit(const HopfAction& pa, const LinSemicat& t) {
  Report r("smash left unit");
  std::string w;
  for (std::size_t y = 0; y < t.size() && w.empty(); ++y) {
    const Vec e = smash_unit(pa, y);
    for (std::size_t x = 0; x < t.size() && w.empty(); ++x)
      for (std::size_t b = 0; b < t.dim(y, x) && w.empty(); ++b) {
        Vec u = unit_vec(t.field(), t.dim(y, x), b);
        if (t.compose(y, y, x, e, u) != u) w = "e_y o " + t.basis_names(y, x)[b];
      }
  }
  r.record("left-unit", w.empty(), w);
  return r;
}

/// The underline smash category: per pair the image of u -> u o (1_x (x) 1_H)
/// inside A (x) H, spanned by the f#h = sum f o (h1 . 1_x) (x) h2.
struct PartialSmash {
  LinSemicat tensor;
  HomSubspaces sub;
  LinSemicat smash;

  Matrix inclusion(std::size_t y, std::size_t x) const { return sub[y][x].inclusion(); }
};

/// f#h for the hom basis element f = f_a and Hopf basis element h.
inline Vec smash_normal_form(const HopfAction& pa, const LinSemicat& t, std::size_t y, std::size_t x, std::size_t a,
                             std::size_t h) {
  const std::size_t d = pa.hopf.dim();
  return t.compose(y, x, x, unit_vec(pa.field(), t.dim(y, x), a * d + h), smash_unit(pa, x));
}

inline PartialSmash partial_smash(const HopfAction& pa) {
  ActionVerdict v = verify_partial_action(pa);
  if (!v.ok()) throw RejectedError("not a partial action: " + v.report.first_failure()->name);
  PartialSmash out{smash_tensor(pa), {}, LinSemicat(pa.field(), {}, {})};
  const std::size_t n = pa.cat.size();
  const std::size_t d = pa.hopf.dim();
  out.sub.assign(n, std::vector<Subspace>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Vec> gens;
      for (std::size_t a = 0; a < pa.cat.dim(y, x); ++a)
        for (std::size_t h = 0; h < d; ++h) gens.push_back(smash_normal_form(pa, out.tensor, y, x, a, h));
      out.sub[y][x] = Subspace(pa.field(), out.tensor.dim(y, x), gens);
    }
  std::vector<Vec> ids;
  for (std::size_t x = 0; x < n; ++x) ids.push_back(smash_unit(pa, x));
  out.smash = induced_subsemicat(out.tensor, out.sub, ids);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::string> names;
      for (const auto& b : out.sub[y][x].basis()) names.push_back(to_string(b));
      out.smash.set_basis_names(y, x, names);
    }
  return out;
}

/// Span equality (A (x) H) o e = span{f#h} and unitality of the diagonals.
inline Report verify_partial_smash(const HopfAction& pa, const PartialSmash& s) {
  Report r("partial smash");
  const std::size_t n = pa.cat.size();
  std::string w;
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      std::vector<Vec> ideal;
      for (std::size_t b = 0; b < s.tensor.dim(y, x); ++b)
        ideal.push_back(s.tensor.compose(y, x, x, unit_vec(pa.field(), s.tensor.dim(y, x), b), smash_unit(pa, x)));
      if (!(Subspace(pa.field(), s.tensor.dim(y, x), ideal) == s.sub[y][x]))
        w = "right ideal differs at " + pa.cat.object(y) + "|" + pa.cat.object(x);
    }
  r.record("right-ideal", w.empty(), w);
  r.merge("", verify_semicat(s.smash));
  return r;
}

/// B#H for a global action on B; identities 1_x (x) 1_H when B has them.
inline LinSemicat global_smash(const HopfAction& b) {
  Report g = verify_global_action(b);
  if (!g.ok()) throw RejectedError("action is not global: " + g.first_failure()->name);
  LinSemicat t = smash_tensor(b);
  if (b.cat.is_category()) {
    std::vector<Vec> ids;
    for (std::size_t x = 0; x < b.cat.size(); ++x) ids.push_back(smash_unit(b, x));
    t.set_identities(ids);
  }
  return t;
}

/// Phi(f#h) = F(f)#h: underline A#H -> B#H, as (F (x) id_H) on the ambient
/// smash coordinates.
inline Semifunctor embed_smash(const HopfAction& pa, const Globalization& g, const PartialSmash& s) {
  Report r = verify_globalization(g, pa);
  if (!r.ok()) throw RejectedError("not a globalization: " + r.first_failure()->name);
  const std::size_t n = pa.cat.size();
  const Matrix id = Matrix::identity(pa.field(), pa.hopf.dim());
  Semifunctor out;
  out.map.assign(n, std::vector<Matrix>(n));
  for (std::size_t x = 0; x < n; ++x) out.object_map.push_back(x);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) out.map[y][x] = kron(g.F[y][x], id) * s.inclusion(y, x);
  return out;
}

/// The global H*-action phi . (f (x) h) = sum f (x) h1 phi(h2), restricted to
/// the underline smash. H* carries the dual basis of H.
inline HopfAction hstar_action(const HopfAction& pa, const PartialSmash& s) {
  const HopfAlgebra& H = pa.hopf;
  const std::size_t d = H.dim();
  const std::size_t n = pa.cat.size();
  HopfAction amb{s.tensor, dualize(H), {}};
  amb.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t m = 0; m < d; ++m) {
    Matrix dm(pa.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t h = 0; h < d; ++h) dm(i, h) = H.comult(h, i, m);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        amb.act[y][x].push_back(kron(Matrix::identity(pa.field(), pa.cat.dim(y, x)), dm));
  }
  std::vector<Vec> ids;
  for (std::size_t x = 0; x < n; ++x) ids.push_back(smash_unit(pa, x));
  HopfAction out = restrict_action(amb, s.sub, ids);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) out.cat.set_basis_names(y, x, s.smash.basis_names(y, x));
  return out;
}

/// h . (f_{yx}) = (h . f_{yx}) entrywise on the one-object a(A).
inline HopfAction matrix_partial_action(const HopfAction& pa) {
  pa.check_shapes();
  MatrixAlgebra ma = matrix_algebra(pa.cat);
  const std::size_t total = ma.algebra.dim();
  const std::size_t n = pa.cat.size();
  HopfAction out{from_algebra(ma.algebra), pa.hopf, {}};
  out.act.assign(1, std::vector<std::vector<Matrix>>(1));
  for (std::size_t i = 0; i < pa.hopf.dim(); ++i) {
    Matrix m(pa.field(), total, total);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const Matrix& p = pa.pi(y, x, i);
        const std::size_t o = ma.offset[y][x];
        for (std::size_t r = 0; r < p.rows(); ++r)
          for (std::size_t c = 0; c < p.cols(); ++c) m(o + r, o + c) = p(r, c);
      }
    out.act[0][0].push_back(std::move(m));
  }
  return out;
}

/// Phi: underline a(A)#H -> a(underline A#H), f E_{y,x} # h -> (f#h) E_{y,x},
/// with inverse Psi, both as matrices between the echelon coordinates.
struct MatrixSmashIso {
  LinSemicat source;       // underline smash of the matrix action, one object
  MatrixAlgebra target;    // a(underline A#H)
  Matrix phi;
  Matrix psi;
  std::vector<Vec> source_idempotents;  // (1_x E_{x,x}) # 1_H
};

inline MatrixSmashIso matrix_smash_iso(const HopfAction& pa) {
  const std::size_t n = pa.cat.size();
  const std::size_t d = pa.hopf.dim();
  const Field F = pa.field();
  PartialSmash cat_smash = partial_smash(pa);
  HopfAction mpa = matrix_partial_action(pa);
  PartialSmash alg_smash = partial_smash(mpa);
  MatrixAlgebra ma = matrix_algebra(pa.cat);
  MatrixSmashIso out{alg_smash.smash, matrix_algebra(cat_smash.smash), Matrix(F, 0, 0), Matrix(F, 0, 0), {}};
  const Subspace& src = alg_smash.sub[0][0];
  const std::size_t ds = src.dim();
  const std::size_t dt = out.target.algebra.dim();
  out.phi = Matrix(F, dt, ds);
  for (std::size_t col = 0; col < ds; ++col) {
    const Vec& u = src.basis()[col];
    Vec img = zero_vec(F, dt);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t m = pa.cat.dim(y, x);
        Vec block(u.begin() + ma.offset[y][x] * d, u.begin() + (ma.offset[y][x] + m) * d);
        Vec ideal = cat_smash.tensor.compose(y, x, x, block, smash_unit(pa, x));
        auto coords = cat_smash.sub[y][x].coordinates(ideal);
        if (!coords) throw StructuralError("block image outside the underline smash");
        img = add(img, out.target.embed(y, x, *coords));
      }
    out.phi.set_column(col, img);
  }
  out.psi = Matrix(F, ds, dt);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < cat_smash.sub[y][x].dim(); ++b) {
        const Vec& v = cat_smash.sub[y][x].basis()[b];
        Vec placed = zero_vec(F, src.ambient());
        for (std::size_t k = 0; k < v.size(); ++k) placed[ma.offset[y][x] * d + k] = v[k];
        auto coords = src.coordinates(placed);
        if (!coords) throw StructuralError("(f#h) E_{y,x} outside the matrix smash");
        out.psi.set_column(out.target.offset[y][x] + b, *coords);
      }
  for (std::size_t x = 0; x < n; ++x) {
    Vec e = zero_vec(F, src.ambient());
    const Vec& id = pa.cat.identity(x);
    for (std::size_t a = 0; a < id.size(); ++a)
      for (std::size_t h = 0; h < d; ++h) e[(ma.offset[x][x] + a) * d + h] = id[a] * pa.hopf.unit[h];
    out.source_idempotents.push_back(*src.coordinates(e));
  }
  return out;
}

/// Phi and Psi as mutually inverse unital algebra maps that carry one
/// idempotent family to the other.
inline Report verify_matrix_smash_iso(const MatrixSmashIso& iso) {
  const Field F = iso.source.field();
  const std::size_t ds = iso.source.dim(0, 0);
  const std::size_t dt = iso.target.algebra.dim();
  Report r("matrix smash isomorphism");
  const bool shapes = iso.phi.rows() == dt && iso.phi.cols() == ds && iso.psi.rows() == ds && iso.psi.cols() == dt;
  r.record("dimensions", shapes, "source dim " + std::to_string(ds) + ", target dim " + std::to_string(dt));
  if (!shapes) return r;
  r.record("phi-psi", iso.phi * iso.psi == Matrix::identity(F, dt), "Phi Psi != id");
  r.record("psi-phi", iso.psi * iso.phi == Matrix::identity(F, ds), "Psi Phi != id");
  std::string w;
  for (std::size_t a = 0; a < ds && w.empty(); ++a)
    for (std::size_t b = 0; b < ds && w.empty(); ++b) {
      Vec ua = unit_vec(F, ds, a), ub = unit_vec(F, ds, b);
      Vec lhs = iso.phi.apply(iso.source.compose(0, 0, 0, ua, ub));
      Vec rhs = iso.target.algebra.multiply(iso.phi.column(a), iso.phi.column(b));
      if (lhs != rhs) w = "Phi(u" + std::to_string(a) + " u" + std::to_string(b) + ") != Phi(u" + std::to_string(a) +
                          ") Phi(u" + std::to_string(b) + ")";
    }
  r.record("phi-multiplicative", w.empty(), w);
  w.clear();
  for (std::size_t a = 0; a < dt && w.empty(); ++a)
    for (std::size_t b = 0; b < dt && w.empty(); ++b) {
      Vec ua = unit_vec(F, dt, a), ub = unit_vec(F, dt, b);
      Vec lhs = iso.psi.apply(iso.target.algebra.multiply(ua, ub));
      Vec rhs = iso.source.compose(0, 0, 0, iso.psi.column(a), iso.psi.column(b));
      if (lhs != rhs) w = "Psi(" + iso.target.algebra.basis[a] + " " + iso.target.algebra.basis[b] + ")";
    }
  r.record("psi-multiplicative", w.empty(), w);
  w.clear();
  if (!iso.target.idempotents) {
    w = "target has no idempotent family";
  } else {
    for (std::size_t x = 0; x < iso.source_idempotents.size() && w.empty(); ++x)
      if (iso.phi.apply(iso.source_idempotents[x]) != (*iso.target.idempotents)[x]) w = "e_" + std::to_string(x);
  }
  r.record("idempotents", w.empty(), w);
  r.record("unital", iso.source.is_category() && iso.target.algebra.unit &&
                         iso.phi.apply(iso.source.identity(0)) == *iso.target.algebra.unit,
           "Phi(1) != 1");
  return r;
}

/// The context at x between _x(underline A#H)_x and R = _x(B#H)_x with
/// M^x = span{F(f) (x) h} and N^x = span{sum (h1 |> F(f)) (x) h2} inside R.
/// Actions and pairings are products in R; tau is pulled back along Phi.
struct SmashMorita {
  std::size_t object = 0;
  MoritaContext context;
  Subspace m;       // M^x in R
  Subspace n;       // N^x in R
  Matrix phi;       // _x(A#H)_x -> R
  Report report;
  PairingStatus status;

  bool ok() const { return report.ok(); }
};

namespace detail {

inline Vec in_basis(const Subspace& s, const Vec& v, const std::string& what) {
  auto c = s.coordinates(v);
  if (!c) throw StructuralError(what + " leaves its subspace");
  return *c;
}

}  // namespace detail

inline SmashMorita smash_morita_context(const HopfAction& pa, const Globalization& g, std::size_t x) {
  Report gr = verify_globalization(g, pa);
  gr.merge("", verify_minimality(g, pa));
  if (!gr.ok()) throw RejectedError("not a minimal globalization: " + gr.first_failure()->name);
  const Field F = pa.field();
  const std::size_t d = pa.hopf.dim();
  PartialSmash s = partial_smash(pa);
  LinSemicat bh = global_smash(g.global);
  Semifunctor phi = embed_smash(pa, g, s);

  SmashMorita out;
  out.object = x;
  out.report = Report("morita at " + pa.cat.object(x));
  Algebra A = endo_algebra(s.smash, x);
  Algebra R = endo_algebra(bh, x);
  R.unit = find_unit(R);
  out.report.record("R-unital", R.unit.has_value(), "_x(B#H)_x has no unit");
  const std::size_t dr = R.dim();
  const Matrix& fx = g.F[x][x];
  std::vector<Vec> mg, ng;
  for (std::size_t a = 0; a < fx.cols(); ++a)
    for (std::size_t h = 0; h < d; ++h) {
      Vec fa = zero_vec(F, dr);
      for (std::size_t k = 0; k < fx.rows(); ++k) fa[k * d + h] = fx(k, a);
      mg.push_back(fa);
      Vec na = zero_vec(F, dr);
      for (auto [i, j, coeff] : pa.hopf.coproduct_terms(h)) {
        Vec moved = g.global.pi(x, x, i).apply(fx.column(a));
        for (std::size_t k = 0; k < moved.size(); ++k) na[k * d + j] += coeff * moved[k];
      }
      ng.push_back(na);
    }
  out.m = Subspace(F, dr, mg);
  out.n = Subspace(F, dr, ng);
  out.phi = phi.at(x, x);
  Subspace image(F, dr, [&] {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < out.phi.cols(); ++c) cols.push_back(out.phi.column(c));
    return cols;
  }());

  const std::size_t da = A.dim(), dm = out.m.dim(), dn = out.n.dim();
  MoritaContext c = MoritaContext::zero(A, R, dm, dn);
  auto prod = [&](const Vec& u, const Vec& v) { return R.multiply(u, v); };
  auto fill = [](Tensor3& t, std::size_t i, std::size_t j, const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k) t(i, j, k) = v[k];
  };
  for (std::size_t i = 0; i < da; ++i) {
    const Vec pa_i = out.phi.column(i);
    for (std::size_t j = 0; j < dm; ++j)
      fill(c.a_m, i, j, detail::in_basis(out.m, prod(pa_i, out.m.basis()[j]), "A M"));
    for (std::size_t j = 0; j < dn; ++j)
      fill(c.n_a, j, i, detail::in_basis(out.n, prod(out.n.basis()[j], pa_i), "N A"));
  }
  for (std::size_t r = 0; r < dr; ++r) {
    const Vec ur = unit_vec(F, dr, r);
    for (std::size_t j = 0; j < dm; ++j)
      fill(c.m_b, j, r, detail::in_basis(out.m, prod(out.m.basis()[j], ur), "M B"));
    for (std::size_t j = 0; j < dn; ++j)
      fill(c.b_n, r, j, detail::in_basis(out.n, prod(ur, out.n.basis()[j]), "B N"));
  }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      Vec mn = prod(out.m.basis()[i], out.n.basis()[j]);
      auto pre = solve(out.phi, Matrix::from_columns(F, dr, {mn}));
      if (!pre) throw StructuralError("M N does not land in the image of _x(A#H)_x");
      fill(c.tau, i, j, pre->column(0));
      fill(c.sigma, j, i, prod(out.n.basis()[j], out.m.basis()[i]));
    }
  out.context = std::move(c);
  out.report.merge("", verify_morita_context(out.context));
  out.status = pairing_status(out.context);
  out.report.record("tau-surjective", out.status.tau_surjective, "tau misses part of _x(A#H)_x");
  out.report.record("sigma-surjective", out.status.sigma_surjective, "sigma misses part of _x(B#H)_x");
  return out;
}

/// D with _yD_x = span{m o r o n : m in M^y, r in _y(B#H)_x, n in N^x} inside
/// B#H and identities e_x (x) 1_H, together with G = Phi: underline A#H -> D.
struct DCategory {
  LinSemicat D;
  HomSubspaces sub;
  Semifunctor G;
  Report report;

  bool ok() const { return report.ok(); }
};

inline DCategory build_D_category(const HopfAction& pa, const Globalization& g) {
  const std::size_t n = pa.cat.size();
  const Field F = pa.field();
  std::vector<SmashMorita> ctx;
  for (std::size_t x = 0; x < n; ++x) {
    ctx.push_back(smash_morita_context(pa, g, x));
    if (!ctx.back().ok()) throw RejectedError("context fails at " + pa.cat.object(x) + ": " +
                                              ctx.back().report.first_failure()->name);
  }
  PartialSmash s = partial_smash(pa);
  LinSemicat bh = global_smash(g.global);
  Semifunctor phi = embed_smash(pa, g, s);
  DCategory out;
  out.sub.assign(n, std::vector<Subspace>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Vec> span;
      for (const auto& m : ctx[y].m.basis())
        for (std::size_t r = 0; r < bh.dim(y, x); ++r) {
          Vec mr = bh.compose(y, y, x, m, unit_vec(F, bh.dim(y, x), r));
          if (is_zero(mr)) continue;
          for (const auto& nn : ctx[x].n.basis()) span.push_back(bh.compose(y, x, x, mr, nn));
        }
      out.sub[y][x] = Subspace(F, bh.dim(y, x), span);
    }
  std::vector<Vec> ids;
  for (std::size_t x = 0; x < n; ++x) ids.push_back(phi.at(x, x).apply(s.smash.identity(x)));
  out.D = induced_subsemicat(bh, out.sub, ids);
  out.report = Report("D category");
  out.report.merge("D", verify_semicat(out.D));
  out.G.map.assign(n, std::vector<Matrix>(n));
  std::string w;
  for (std::size_t x = 0; x < n; ++x) out.G.object_map.push_back(x);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      Matrix gm(F, out.sub[y][x].dim(), s.smash.dim(y, x));
      for (std::size_t c = 0; c < gm.cols(); ++c) {
        auto coords = out.sub[y][x].coordinates(phi.at(y, x).column(c));
        if (!coords) {
          if (w.empty()) w = "G leaves D at " + pa.cat.object(y) + "|" + pa.cat.object(x);
          continue;
        }
        gm.set_column(c, *coords);
      }
      out.G.map[y][x] = std::move(gm);
    }
  out.report.record("G-lands-in-D", w.empty(), w);
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (out.sub[y][x].dim() != s.smash.dim(y, x) || rank(out.G.map[y][x]) != s.smash.dim(y, x))
        w = "G is not bijective at " + pa.cat.object(y) + "|" + pa.cat.object(x);
  out.report.record("G-bijective", w.empty(), w);
  Report f = verify_semifunctor(s.smash, out.D, out.G);
  out.report.record("G-functorial", f.passed("composition"), f.passed("composition") ? "" : f.first_failure()->witness);
  out.report.record("G-identities", f.passed("identities"), f.passed("identities") ? "" : f.first_failure()->witness);
  return out;
}

}  // namespace parthopf
