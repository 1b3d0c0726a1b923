#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parthopf/action/partial_action.hpp"

namespace parthopf {

/// The one-object category k.
inline LinSemicat point_category(Field field, const std::string& object = "*") {
  Algebra k{field, {"1"}, Tensor3(field, 1, 1, 1), Vec{Scalar::one(field)}};
  k.mult(0, 0, 0) = Scalar::one(field);
  return from_algebra(k, object);
}

/// The action on k with b_i . 1 = lambda[i].
inline HopfAction action_on_point(const HopfAlgebra& h, const Vec& lambda) {
  if (lambda.size() != h.dim()) throw StructuralError("lambda needs one value per Hopf basis element");
  HopfAction pa{point_category(h.field), h, {}};
  pa.act.assign(1, std::vector<std::vector<Matrix>>(1));
  for (const auto& v : lambda) {
    Matrix m(h.field, 1, 1);
    m(0, 0) = v;
    pa.act[0][0].push_back(m);
  }
  return pa;
}

inline void require_char_coprime(Field field, std::size_t order) {
  if (field.divides(order)) {
    throw UnsupportedFieldError("char " + std::to_string(field.characteristic) + " divides |G| = " +
                                std::to_string(order));
  }
}

/// p_g . f = f / |G| on every hom space.
inline HopfAction build_uniform_dual_action(const LinSemicat& c, const FiniteGroup& g) {
  require_char_coprime(c.field(), g.order());
  HopfAlgebra h = build_dual_group_hopf(g, c.field());
  HopfAction pa{c, h, {}};
  const Scalar w = Scalar(c.field(), 1L, static_cast<long>(g.order()));
  const std::size_t n = c.size();
  pa.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < g.order(); ++i) pa.act[y][x].push_back(w * Matrix::identity(c.field(), c.dim(y, x)));
  return pa;
}

/// Subgroups G_x per object and elements t_yx for pairs x != y with nonzero
/// hom space. The diagonal t_xx is the identity.
struct SubgroupData {
  std::vector<Subgroup> stabilizer;
  std::vector<std::vector<std::optional<Index>>> t;

  Index t_at(const FiniteGroup& g, std::size_t y, std::size_t x) const {
    if (y == x) return g.identity();
    if (!t.at(y).at(x)) throw RejectedError("t is undefined at a nonzero hom pair");
    return *t[y][x];
  }
};

inline bool is_schurian(const LinSemicat& c) {
  for (std::size_t y = 0; y < c.size(); ++y)
    for (std::size_t x = 0; x < c.size(); ++x)
      if (c.dim(y, x) > 1) return false;
  return true;
}

/// Conditions (i) each G_x a subgroup, (ii) G_y = t_yx G_x t_yx^-1 on nonzero
/// pairs, (iii) (t_zy t_yx) G_x = t_zx G_x whenever composition
/// _zC_y x _yC_x -> _zC_x is nonzero (t_ww = e).
inline Report verify_subgroup_data(const LinSemicat& c, const FiniteGroup& g, const SubgroupData& sd) {
  const std::size_t n = c.size();
  if (sd.stabilizer.size() != n) throw StructuralError("subgroup data needs one subgroup per object");
  Report r("subgroup data");
  std::string w;
  for (std::size_t x = 0; x < n && w.empty(); ++x)
    if (!g.is_subgroup(sd.stabilizer[x].elements)) w = "G_" + c.object(x) + " is not a subgroup";
  r.record("i", w.empty(), w);
  if (!w.empty()) return r;
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      if (x == y || c.dim(y, x) == 0) continue;
      if (sd.t.size() != n || sd.t[y].size() != n || !sd.t[y][x]) {
        w = "t undefined at " + c.object(y) + "|" + c.object(x);
      } else if (g.conjugate(sd.stabilizer[x], *sd.t[y][x]) != sd.stabilizer[y]) {
        w = "G_" + c.object(y) + " != t G_" + c.object(x) + " t^-1";
      }
    }
  r.record("ii", w.empty(), w);
  if (!w.empty()) return r;
  w.clear();
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x) {
        if (c.comp(z, y, x).is_zero()) continue;
        Index lhs = g.mul(sd.t_at(g, z, y), sd.t_at(g, y, x));
        if (!g.same_left_coset(lhs, sd.t_at(g, z, x), sd.stabilizer[x])) {
          w = "(t_zy t_yx) G_x != t_zx G_x at " + c.object(z) + "," + c.object(y) + "," + c.object(x);
        }
      }
  r.record("iii", w.empty(), w);
  return r;
}

/// The partial k^G action with pi_g = 1/|G_x| on t_yx G_x and 0 elsewhere on
/// the (at most one-dimensional) hom space _yC_x.
inline HopfAction build_from_subgroup_data(const LinSemicat& c, const FiniteGroup& g, const SubgroupData& sd) {
  if (!c.is_category()) throw RejectedError("subgroup data needs a category");
  if (!is_schurian(c)) throw RejectedError("subgroup data needs a Schurian category (hom dims <= 1)");
  require_char_coprime(c.field(), g.order());
  Report r = verify_subgroup_data(c, g, sd);
  if (!r.ok()) throw RejectedError("condition (" + r.first_failure()->name + ") fails: " + r.first_failure()->witness);
  HopfAction pa{c, build_dual_group_hopf(g, c.field()), {}};
  const std::size_t n = c.size();
  pa.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (Index s = 0; s < g.order(); ++s) {
        Matrix m(c.field(), c.dim(y, x), c.dim(y, x));
        if (c.dim(y, x) == 1) {
          const Subgroup& gx = sd.stabilizer[x];
          if (g.same_left_coset(sd.t_at(g, y, x), s, gx))
            m(0, 0) = Scalar(c.field(), 1L, static_cast<long>(gx.order()));
        }
        pa.act[y][x].push_back(m);
      }
  return pa;
}

struct ExtractedSubgroups {
  SubgroupData data;
  Report report;
};

/// Reads G_x = supp lambda^x and t_yx = least element with pi_t != 0 off a
/// partial k^G action induced by k whose pi are scalar, then checks (i)-(iii)
/// and that pi = 1/|G_x| exactly on t_yx G_x.
inline ExtractedSubgroups extract_subgroup_data(const HopfAction& pa, const FiniteGroup& g) {
  if (!same_structure(pa.hopf, build_dual_group_hopf(g, pa.field())))
    throw RejectedError("action is not over k^G for the given group");
  const LinSemicat& c = pa.cat;
  const std::size_t n = c.size();
  // Scalar coefficient of each pi_s on each nonzero pair.
  std::vector<std::vector<std::vector<Scalar>>> coeff(n, std::vector<std::vector<Scalar>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t d = c.dim(y, x);
      for (Index s = 0; s < g.order(); ++s) {
        const Matrix& m = pa.pi(y, x, s);
        Scalar v = d == 0 ? Scalar::zero(pa.field()) : m(0, 0);
        if (d > 0 && m != v * Matrix::identity(pa.field(), d)) {
          throw RejectedError("pi_" + g.name(s) + " is not scalar on " + c.object(y) + "|" + c.object(x));
        }
        coeff[y][x].push_back(v);
      }
    }
  ExtractedSubgroups out;
  out.report = Report("subgroup extraction");
  out.data.t.assign(n, std::vector<std::optional<Index>>(n));
  std::string w;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Index> support;
    for (Index s = 0; s < g.order(); ++s)
      if (!coeff[x][x][s].is_zero()) support.push_back(s);
    if (!g.is_subgroup(support) && w.empty()) w = "supp lambda^" + c.object(x) + " is not a subgroup";
    out.data.stabilizer.push_back(Subgroup{support});
  }
  out.report.record("i", w.empty(), w);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y || c.dim(y, x) == 0) continue;
      for (Index s = 0; s < g.order() && !out.data.t[y][x]; ++s)
        if (!coeff[y][x][s].is_zero()) out.data.t[y][x] = s;
    }
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      if (c.dim(y, x) == 0) continue;
      if (y != x && !out.data.t[y][x]) {
        w = "pi vanishes identically on " + c.object(y) + "|" + c.object(x);
        break;
      }
      const Subgroup& gx = out.data.stabilizer[x];
      const Index t = y == x ? g.identity() : *out.data.t[y][x];
      if (gx.order() == 0) {
        w = "empty support at " + c.object(x);
        break;
      }
      const Scalar value(pa.field(), 1L, static_cast<long>(gx.order()));
      for (Index s = 0; s < g.order() && w.empty(); ++s) {
        const bool inside = g.same_left_coset(t, s, gx);
        const Scalar expect = inside ? value : Scalar::zero(pa.field());
        if (coeff[y][x][s] != expect) w = "pi_" + g.name(s) + " on " + c.object(y) + "|" + c.object(x);
      }
    }
  out.report.record("support-and-value", w.empty(), w);
  if (out.report.ok()) {
    Report cond = verify_subgroup_data(c, g, out.data);
    for (const auto& chk : cond.checks())
      if (chk.name != "i") out.report.record(chk.name, chk.passed, chk.witness);
  }
  return out;
}

/// One classified action on k together with the subgroup it comes from.
struct PointAction {
  Subgroup subgroup;
  HopfAction action;
};

/// Partial k^G actions on k: lambda_g = 1/|H| on a subgroup H, 0 elsewhere,
/// one per subgroup in enumerate_subgroups order.
inline std::vector<PointAction> classify_dual_on_point(const FiniteGroup& g, Field field = Field::rationals()) {
  require_char_coprime(field, g.order());
  HopfAlgebra h = build_dual_group_hopf(g, field);
  std::vector<PointAction> out;
  for (const auto& sub : g.enumerate_subgroups()) {
    Vec lambda = zero_vec(field, g.order());
    for (Index s : sub.elements) lambda[s] = Scalar(field, 1L, static_cast<long>(sub.order()));
    out.push_back({sub, action_on_point(h, lambda)});
  }
  return out;
}

/// Partial kG actions on k: lambda_g = 1 on a subgroup H, 0 elsewhere.
inline std::vector<PointAction> classify_group_algebra_on_point(const FiniteGroup& g,
                                                                Field field = Field::rationals()) {
  HopfAlgebra h = build_group_algebra(g, field);
  std::vector<PointAction> out;
  for (const auto& sub : g.enumerate_subgroups()) {
    Vec lambda = zero_vec(field, g.order());
    for (Index s : sub.elements) lambda[s] = Scalar::one(field);
    out.push_back({sub, action_on_point(h, lambda)});
  }
  return out;
}

/// Partial G-action on a category fixing objects: ideals I^g generated by
/// central idempotents e^g and maps alpha_g: I^{g^-1} -> I^g. alpha[g][y][x]
/// is an ambient matrix on _yC_x whose restriction to I^{g^-1} is alpha_g.
struct PartialGroupAction {
  FiniteGroup group;
  LinSemicat cat;
  std::vector<CentralIdempotent> e;
  std::vector<CatIdeal> ideal;
  std::vector<std::vector<std::vector<Matrix>>> alpha;
};

/// e^g_x = g.1_x, I^g its ideal, alpha_g = g.(-) on I^{g^-1}.
inline PartialGroupAction to_partial_group_action(const HopfAction& pa, const FiniteGroup& g) {
  if (!same_structure(pa.hopf, build_group_algebra(g, pa.field())))
    throw RejectedError("action is not over kG for the given group");
  ActionVerdict v = verify_partial_action(pa);
  if (!v.ok()) throw RejectedError("not a partial action: " + v.report.first_failure()->name);
  const std::size_t n = pa.cat.size();
  PartialGroupAction out{g, pa.cat, {}, {}, {}};
  for (Index s = 0; s < g.order(); ++s) {
    CentralIdempotent e;
    for (std::size_t x = 0; x < n; ++x) e.push_back(pa.lambda(x, s));
    out.ideal.push_back(ideal_of_idempotent(pa.cat, e));
    out.e.push_back(std::move(e));
    std::vector<std::vector<Matrix>> a(n, std::vector<Matrix>(n));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) a[y][x] = pa.pi(y, x, s);
    out.alpha.push_back(std::move(a));
  }
  return out;
}

/// Central idempotents and their ideals, (a) I^e = C and alpha_e = id,
/// alpha_g an isomorphism of semicategories I^{g^-1} -> I^g,
/// (b) alpha_{h^-1}(I^h cap I^{g^-1}) within I^{(gh)^-1},
/// (c) alpha_g alpha_h = alpha_{gh} on alpha_{h^-1}(I^h cap I^{g^-1}).
inline Report verify_partial_group_action(const PartialGroupAction& pga) {
  const FiniteGroup& G = pga.group;
  const LinSemicat& c = pga.cat;
  const std::size_t n = c.size();
  const Field F = c.field();
  if (pga.e.size() != G.order() || pga.ideal.size() != G.order() || pga.alpha.size() != G.order())
    throw StructuralError("partial group action needs one ideal and map per group element");
  Report r("partial group action");
  std::string w;
  for (Index g = 0; g < G.order() && w.empty(); ++g) {
    Report ce = verify_central_idempotent(c, pga.e[g]);
    if (!ce.ok()) w = "e^" + G.name(g) + ": " + ce.first_failure()->witness;
    else if (!(ideal_of_idempotent(c, pga.e[g]).hom == pga.ideal[g].hom))
      w = "I^" + G.name(g) + " is not generated by e^" + G.name(g);
  }
  r.record("idempotent-ideals", w.empty(), w);
  if (!w.empty()) return r;

  auto alpha = [&](Index g, std::size_t y, std::size_t x, std::span<const Scalar> f) {
    return pga.alpha[g][y][x].apply(f);
  };
  const Index e = G.identity();
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      if (pga.ideal[e].hom[y][x].dim() != c.dim(y, x)) w = "I^e != C at " + c.object(y) + "|" + c.object(x);
      else if (pga.alpha[e][y][x] != Matrix::identity(F, c.dim(y, x))) w = "alpha_e != id";
    }
  r.record("a", w.empty(), w);

  w.clear();
  for (Index g = 0; g < G.order() && w.empty(); ++g) {
    const CatIdeal& src = pga.ideal[G.inv(g)];
    const CatIdeal& dst = pga.ideal[g];
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x) {
        std::vector<Vec> images;
        for (const auto& f : src.hom[y][x].basis()) images.push_back(alpha(g, y, x, f));
        Subspace img(F, c.dim(y, x), images);
        if (img.dim() != src.hom[y][x].dim() || !(img == dst.hom[y][x]))
          w = "alpha_" + G.name(g) + " is not a bijection onto I^" + G.name(g) + " at " + c.object(y) + "|" + c.object(x);
      }
    for (std::size_t z = 0; z < n && w.empty(); ++z)
      for (std::size_t y = 0; y < n && w.empty(); ++y)
        for (std::size_t x = 0; x < n && w.empty(); ++x)
          for (const auto& f : src.hom[z][y].basis())
            for (const auto& h : src.hom[y][x].basis())
              if (w.empty() && alpha(g, z, x, c.compose(z, y, x, f, h)) !=
                                   c.compose(z, y, x, alpha(g, z, y, f), alpha(g, y, x, h)))
                w = "alpha_" + G.name(g) + " does not preserve composition";
  }
  r.record("alpha-isomorphisms", w.empty(), w);

  std::string wb;
  std::string wc;
  for (Index g = 0; g < G.order(); ++g)
    for (Index h = 0; h < G.order(); ++h) {
      const Index gh = G.mul(g, h);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
          Subspace meet = pga.ideal[h].hom[y][x].intersect(pga.ideal[G.inv(g)].hom[y][x]);
          for (const auto& u : meet.basis()) {
            Vec f = alpha(G.inv(h), y, x, u);
            if (wb.empty() && !pga.ideal[G.inv(gh)].hom[y][x].contains(f))
              wb = "g=" + G.name(g) + " h=" + G.name(h) + " at " + c.object(y) + "|" + c.object(x);
            Vec ah = alpha(h, y, x, f);
            if (wc.empty() && (!pga.ideal[G.inv(g)].hom[y][x].contains(ah) || alpha(g, y, x, ah) != alpha(gh, y, x, f)))
              wc = "g=" + G.name(g) + " h=" + G.name(h) + " at " + c.object(y) + "|" + c.object(x);
          }
        }
    }
  r.record("b", wb.empty(), wb);
  r.record("c", wc.empty(), wc);
  return r;
}

/// g.f = alpha_g(f o e^{g^-1}_x).
inline HopfAction from_partial_group_action(const PartialGroupAction& pga) {
  Report r = verify_partial_group_action(pga);
  if (!r.ok()) throw RejectedError("not a partial group action: " + r.first_failure()->name);
  const FiniteGroup& G = pga.group;
  const LinSemicat& c = pga.cat;
  const std::size_t n = c.size();
  HopfAction pa{c, build_group_algebra(G, c.field()), {}};
  pa.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (Index g = 0; g < G.order(); ++g) {
        Matrix m(c.field(), c.dim(y, x), c.dim(y, x));
        for (std::size_t a = 0; a < c.dim(y, x); ++a) {
          Vec f = unit_vec(c.field(), c.dim(y, x), a);
          m.set_column(a, pga.alpha[g][y][x].apply(c.compose(y, x, x, f, pga.e[G.inv(g)][x])));
        }
        pa.act[y][x].push_back(std::move(m));
      }
  return pa;
}

}  // namespace parthopf
