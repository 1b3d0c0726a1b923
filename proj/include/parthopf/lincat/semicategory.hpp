#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "parthopf/hopf/algebra.hpp"

namespace parthopf {

/// Finite k-linear semicategory over objects 0..n-1.
///
/// Morphisms x -> y form the hom space _yC_x, addressed everywhere as the
/// pair (y, x). comp(z, y, x) is the tensor of _zC_y x _yC_x -> _zC_x, so
/// comp(z,y,x)(a, b, c) is the coefficient of basis c in f_a o g_b.
/// Identities are optional; when present the semicategory is a category.
class LinSemicat {
 public:
  LinSemicat() = default;

  /// All compositions zero; hom_dims[y][x] = dim _yC_x.
  LinSemicat(Field field, std::vector<std::string> objects, std::vector<std::vector<std::size_t>> hom_dims)
      : field_(field), objects_(std::move(objects)), homdim_(std::move(hom_dims)) {
    const std::size_t n = objects_.size();
    if (homdim_.size() != n) throw StructuralError("hom dimension grid must be n x n");
    for (const auto& row : homdim_) {
      if (row.size() != n) throw StructuralError("hom dimension grid must be n x n");
    }
    names_.assign(n, std::vector<std::vector<std::string>>(n));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < homdim_[y][x]; ++i)
          names_[y][x].push_back(objects_[y] + "<-" + objects_[x] + ":" + std::to_string(i));
    comp_.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          comp_[(z * n + y) * n + x] = Tensor3(field, homdim_[z][y], homdim_[y][x], homdim_[z][x]);
  }

  Field field() const { return field_; }
  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(std::size_t x) const { return objects_.at(x); }
  std::size_t dim(std::size_t y, std::size_t x) const { return homdim_.at(y).at(x); }
  const std::vector<std::vector<std::size_t>>& hom_dims() const { return homdim_; }

  std::size_t object_index(const std::string& name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) throw StructuralError("no object named '" + name + "'");
    return static_cast<std::size_t>(it - objects_.begin());
  }

  const std::vector<std::string>& basis_names(std::size_t y, std::size_t x) const { return names_.at(y).at(x); }
  void set_basis_names(std::size_t y, std::size_t x, std::vector<std::string> names) {
    if (names.size() != dim(y, x)) throw StructuralError("basis name count differs from hom dimension");
    names_.at(y).at(x) = std::move(names);
  }

  Tensor3& comp(std::size_t z, std::size_t y, std::size_t x) { return comp_.at((z * size() + y) * size() + x); }
  const Tensor3& comp(std::size_t z, std::size_t y, std::size_t x) const {
    return comp_.at((z * size() + y) * size() + x);
  }

  /// f o g for f in _zC_y and g in _yC_x.
  Vec compose(std::size_t z, std::size_t y, std::size_t x, std::span<const Scalar> f, std::span<const Scalar> g) const {
    return comp(z, y, x).contract(f, g);
  }

  bool is_category() const { return identities_.has_value(); }
  const std::optional<std::vector<Vec>>& identities() const { return identities_; }
  const Vec& identity(std::size_t x) const {
    if (!identities_) throw RejectedError("semicategory has no identities");
    return identities_->at(x);
  }
  void set_identities(std::vector<Vec> ids) {
    if (ids.size() != size()) throw StructuralError("one identity per object required");
    for (std::size_t x = 0; x < size(); ++x) {
      if (ids[x].size() != dim(x, x)) throw StructuralError("identity of " + objects_[x] + " has the wrong length");
    }
    identities_ = std::move(ids);
  }
  void clear_identities() { identities_.reset(); }

  /// Checks that every composition tensor matches the hom dimension grid.
  void check_shapes() const {
    const std::size_t n = size();
    if (comp_.size() != n * n * n) throw StructuralError("composition table has the wrong number of blocks");
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
          const Tensor3& t = comp(z, y, x);
          if (t.dim(0) != dim(z, y) || t.dim(1) != dim(y, x) || t.dim(2) != dim(z, x)) {
            throw StructuralError("composition " + objects_[z] + "|" + objects_[y] + "|" + objects_[x] +
                                  " does not match the hom dimensions");
          }
        }
  }

 private:
  Field field_{};
  std::vector<std::string> objects_;
  std::vector<std::vector<std::size_t>> homdim_;
  std::vector<std::vector<std::vector<std::string>>> names_;
  std::vector<Tensor3> comp_;
  std::optional<std::vector<Vec>> identities_;
};

/// Associativity on every composable basis triple, and the unit laws when
/// identities are present.
inline Report verify_semicat(const LinSemicat& c) {
  c.check_shapes();
  const std::size_t n = c.size();
  const Field F = c.field();
  Report r("semicategory");
  std::string w;
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x)
        for (std::size_t v = 0; v < n && w.empty(); ++v) {
          if (c.dim(z, y) == 0 || c.dim(y, x) == 0 || c.dim(x, v) == 0) continue;
          for (std::size_t a = 0; a < c.dim(z, y) && w.empty(); ++a) {
            Vec f = unit_vec(F, c.dim(z, y), a);
            for (std::size_t b = 0; b < c.dim(y, x) && w.empty(); ++b) {
              Vec g = unit_vec(F, c.dim(y, x), b);
              Vec fg = c.compose(z, y, x, f, g);
              for (std::size_t d = 0; d < c.dim(x, v) && w.empty(); ++d) {
                Vec h = unit_vec(F, c.dim(x, v), d);
                if (c.compose(z, x, v, fg, h) != c.compose(z, y, v, f, c.compose(y, x, v, g, h))) {
                  w = "(" + c.basis_names(z, y)[a] + " o " + c.basis_names(y, x)[b] + ") o " +
                      c.basis_names(x, v)[d] + " at objects " + c.object(z) + "," + c.object(y) + "," +
                      c.object(x) + "," + c.object(v);
                }
              }
            }
          }
        }
  r.record("associativity", w.empty(), w);
  if (c.is_category()) {
    w.clear();
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x)
        for (std::size_t a = 0; a < c.dim(y, x) && w.empty(); ++a) {
          Vec f = unit_vec(F, c.dim(y, x), a);
          if (c.compose(y, y, x, c.identity(y), f) != f) w = "1_" + c.object(y) + " o " + c.basis_names(y, x)[a];
          else if (c.compose(y, x, x, f, c.identity(x)) != f) w = c.basis_names(y, x)[a] + " o 1_" + c.object(x);
        }
    r.record("unit", w.empty(), w);
  }
  return r;
}

/// One-object (semi)category with hom space A.
inline LinSemicat from_algebra(const Algebra& a, const std::string& object = "*") {
  LinSemicat c(a.field, {object}, {{a.dim()}});
  c.comp(0, 0, 0) = a.mult;
  c.set_basis_names(0, 0, a.basis);
  if (a.unit) c.set_identities({*a.unit});
  return c;
}

/// The endomorphism algebra _xC_x.
inline Algebra endo_algebra(const LinSemicat& c, std::size_t x) {
  Algebra a{c.field(), c.basis_names(x, x), c.comp(x, x, x), std::nullopt};
  if (c.is_category()) a.unit = c.identity(x);
  return a;
}

/// The matrix algebra a(C) = (+)_{y,x} _yC_x with block (y, x) at offset[y][x]
/// and (f E_{z,y})(g E_{y,x}) = (f o g) E_{z,x}.
struct MatrixAlgebra {
  Algebra algebra;
  std::vector<std::vector<std::size_t>> offset;
  /// e_x = 1_x E_{x,x}, present when C has identities.
  std::optional<std::vector<Vec>> idempotents;

  /// Embeds f in _yC_x as f E_{y,x}.
  Vec embed(std::size_t y, std::size_t x, std::span<const Scalar> f) const {
    Vec v = zero_vec(algebra.field, algebra.dim());
    for (std::size_t i = 0; i < f.size(); ++i) v[offset[y][x] + i] = f[i];
    return v;
  }
};

inline MatrixAlgebra matrix_algebra(const LinSemicat& c) {
  c.check_shapes();
  const std::size_t n = c.size();
  MatrixAlgebra m;
  m.offset.assign(n, std::vector<std::size_t>(n, 0));
  std::size_t total = 0;
  std::vector<std::string> names;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      m.offset[y][x] = total;
      total += c.dim(y, x);
      for (const auto& s : c.basis_names(y, x)) names.push_back(s);
    }
  m.algebra = Algebra{c.field(), names, Tensor3(c.field(), total, total, total), std::nullopt};
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const Tensor3& t = c.comp(z, y, x);
        for (std::size_t a = 0; a < t.dim(0); ++a)
          for (std::size_t b = 0; b < t.dim(1); ++b)
            for (std::size_t d = 0; d < t.dim(2); ++d)
              m.algebra.mult(m.offset[z][y] + a, m.offset[y][x] + b, m.offset[z][x] + d) = t(a, b, d);
      }
  if (c.is_category()) {
    std::vector<Vec> ids;
    Vec one = zero_vec(c.field(), total);
    for (std::size_t x = 0; x < n; ++x) {
      ids.push_back(m.embed(x, x, c.identity(x)));
      one = add(one, ids.back());
    }
    m.idempotents = ids;
    m.algebra.unit = one;
  }
  return m;
}

/// Per-object family e_x in _xC_x.
using CentralIdempotent = std::vector<Vec>;

inline Report verify_central_idempotent(const LinSemicat& c, const CentralIdempotent& e) {
  if (e.size() != c.size()) throw StructuralError("central idempotent needs one element per object");
  const std::size_t n = c.size();
  Report r("central idempotent");
  std::string w;
  for (std::size_t x = 0; x < n && w.empty(); ++x) {
    if (e[x].size() != c.dim(x, x)) throw StructuralError("idempotent at " + c.object(x) + " has the wrong length");
    if (c.compose(x, x, x, e[x], e[x]) != e[x]) w = "e_" + c.object(x) + " o e_" + c.object(x) + " != e_" + c.object(x);
  }
  r.record("idempotent", w.empty(), w);
  w.clear();
  for (std::size_t y = 0; y < n && w.empty(); ++y)
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t a = 0; a < c.dim(y, x) && w.empty(); ++a) {
        Vec f = unit_vec(c.field(), c.dim(y, x), a);
        if (c.compose(y, y, x, e[y], f) != c.compose(y, x, x, f, e[x])) {
          w = "e_" + c.object(y) + " o " + c.basis_names(y, x)[a] + " != " + c.basis_names(y, x)[a] + " o e_" +
              c.object(x);
        }
      }
  r.record("central", w.empty(), w);
  return r;
}

/// Per-pair subspaces _yI_x of _yC_x.
struct CatIdeal {
  std::vector<std::vector<Subspace>> hom;
};

using HomSubspaces = std::vector<std::vector<Subspace>>;

/// _yI_x = e_y _yC_x e_x as the image of f -> e_y o f o e_x.
inline CatIdeal ideal_of_idempotent(const LinSemicat& c, const CentralIdempotent& e) {
  Report check = verify_central_idempotent(c, e);
  if (!check.passed("idempotent")) throw RejectedError("not an idempotent: " + check.first_failure()->witness);
  const std::size_t n = c.size();
  CatIdeal ideal;
  ideal.hom.assign(n, std::vector<Subspace>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<Vec> images;
      for (std::size_t a = 0; a < c.dim(y, x); ++a) {
        Vec f = unit_vec(c.field(), c.dim(y, x), a);
        images.push_back(c.compose(y, y, x, e[y], c.compose(y, x, x, f, e[x])));
      }
      ideal.hom[y][x] = Subspace(c.field(), c.dim(y, x), images);
    }
  return ideal;
}

/// Both absorption laws: C o I and I o C land in I on all basis pairs.
inline Report verify_ideal(const LinSemicat& c, const CatIdeal& ideal) {
  const std::size_t n = c.size();
  Report r("ideal");
  std::string w;
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x) {
        for (const auto& u : ideal.hom[y][x].basis()) {
          for (std::size_t a = 0; a < c.dim(z, y) && w.empty(); ++a) {
            if (!ideal.hom[z][x].contains(c.compose(z, y, x, unit_vec(c.field(), c.dim(z, y), a), u))) {
              w = c.basis_names(z, y)[a] + " o I(" + c.object(y) + "," + c.object(x) + ") leaves the ideal";
            }
          }
        }
        for (const auto& u : ideal.hom[z][y].basis()) {
          for (std::size_t b = 0; b < c.dim(y, x) && w.empty(); ++b) {
            if (!ideal.hom[z][x].contains(c.compose(z, y, x, u, unit_vec(c.field(), c.dim(y, x), b)))) {
              w = "I(" + c.object(z) + "," + c.object(y) + ") o " + c.basis_names(y, x)[b] + " leaves the ideal";
            }
          }
        }
      }
  r.record("absorption", w.empty(), w);
  return r;
}

/// The semicategory carried by per-pair subspaces of c, in echelon
/// coordinates. Throws when the subspaces are not closed under composition.
/// Identities, when given, are ambient vectors that must lie in the diagonal
/// subspaces.
inline LinSemicat induced_subsemicat(const LinSemicat& c, const HomSubspaces& sub,
                                     const std::optional<std::vector<Vec>>& identities = std::nullopt) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (sub.at(y).at(x).ambient() != c.dim(y, x)) throw StructuralError("subspace ambient differs from hom dimension");
      dims[y][x] = sub[y][x].dim();
    }
  LinSemicat s(c.field(), c.objects(), dims);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        Tensor3& t = s.comp(z, y, x);
        for (std::size_t a = 0; a < dims[z][y]; ++a)
          for (std::size_t b = 0; b < dims[y][x]; ++b) {
            auto coords = sub[z][x].coordinates(c.compose(z, y, x, sub[z][y].basis()[a], sub[y][x].basis()[b]));
            if (!coords) {
              throw StructuralError("subspaces not closed under composition at " + c.object(z) + "|" + c.object(y) +
                                    "|" + c.object(x));
            }
            for (std::size_t d = 0; d < dims[z][x]; ++d) t(a, b, d) = (*coords)[d];
          }
      }
  if (identities) {
    std::vector<Vec> ids;
    for (std::size_t x = 0; x < n; ++x) {
      auto coords = sub[x][x].coordinates(identities->at(x));
      if (!coords) throw StructuralError("identity of " + c.object(x) + " lies outside the subspace");
      ids.push_back(*coords);
    }
    s.set_identities(ids);
  }
  return s;
}

/// The ideal of a central idempotent as a category with identities e_x.
inline LinSemicat ideal_category(const LinSemicat& c, const CentralIdempotent& e, const CatIdeal& ideal) {
  return induced_subsemicat(c, ideal.hom, e);
}

/// Objects are pairs (a, b) at index a * |B| + b; _{(y,y')}(A (x) B)_{(x,x')}
/// has basis f_i (x) g_j at index i * dim g + j; composition and identities
/// are componentwise.
inline LinSemicat tensor_categories(const LinSemicat& a, const LinSemicat& b) {
  if (!a.is_category() || !b.is_category()) throw RejectedError("tensor product needs two categories");
  if (a.field() != b.field()) throw StructuralError("tensor factors over different fields");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) objects.push_back("(" + a.object(i) + "," + b.object(j) + ")");
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) dims[y][x] = a.dim(y / nb, x / nb) * b.dim(y % nb, x % nb);
  LinSemicat t(a.field(), objects, dims);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::string> names;
      for (const auto& u : a.basis_names(y / nb, x / nb))
        for (const auto& v : b.basis_names(y % nb, x % nb)) names.push_back(u + "(x)" + v);
      t.set_basis_names(y, x, names);
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        const Tensor3& ta = a.comp(z / nb, y / nb, x / nb);
        const Tensor3& tb = b.comp(z % nb, y % nb, x % nb);
        Tensor3& out = t.comp(z, y, x);
        for (std::size_t i = 0; i < ta.dim(0); ++i)
          for (std::size_t j = 0; j < ta.dim(1); ++j)
            for (std::size_t k = 0; k < ta.dim(2); ++k) {
              if (ta(i, j, k).is_zero()) continue;
              for (std::size_t p = 0; p < tb.dim(0); ++p)
                for (std::size_t q = 0; q < tb.dim(1); ++q)
                  for (std::size_t r = 0; r < tb.dim(2); ++r) {
                    if (tb(p, q, r).is_zero()) continue;
                    out(i * tb.dim(0) + p, j * tb.dim(1) + q, k * tb.dim(2) + r) = ta(i, j, k) * tb(p, q, r);
                  }
            }
      }
  std::vector<Vec> ids;
  for (std::size_t x = 0; x < n; ++x) {
    const Vec& u = a.identity(x / nb);
    const Vec& v = b.identity(x % nb);
    Vec w;
    for (const auto& s : u)
      for (const auto& r : v) w.push_back(s * r);
    ids.push_back(w);
  }
  t.set_identities(ids);
  return t;
}

/// Blocks of the finest partition joining x and y whenever _yC_x or _xC_y is
/// nonzero. Blocks are sorted and listed by least element.
inline std::vector<std::vector<std::size_t>> connected_components(const LinSemicat& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (c.dim(y, x) > 0) {
        std::size_t a = find(x);
        std::size_t b = find(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> block_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t root = find(x);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[root])].push_back(x);
  }
  return blocks;
}

/// Object map plus one matrix per hom pair: map[y][x] sends _yC_x into
/// _{F y}D_{F x}.
struct Semifunctor {
  std::vector<std::size_t> object_map;
  std::vector<std::vector<Matrix>> map;

  const Matrix& at(std::size_t y, std::size_t x) const { return map.at(y).at(x); }
};

inline Semifunctor identity_semifunctor(const LinSemicat& c) {
  Semifunctor f;
  for (std::size_t x = 0; x < c.size(); ++x) f.object_map.push_back(x);
  f.map.assign(c.size(), std::vector<Matrix>(c.size()));
  for (std::size_t y = 0; y < c.size(); ++y)
    for (std::size_t x = 0; x < c.size(); ++x) f.map[y][x] = Matrix::identity(c.field(), c.dim(y, x));
  return f;
}

/// Composition preserved on all basis pairs; identities preserved when both
/// sides are categories.
inline Report verify_semifunctor(const LinSemicat& src, const LinSemicat& dst, const Semifunctor& f) {
  const std::size_t n = src.size();
  if (f.object_map.size() != n || f.map.size() != n) throw StructuralError("semifunctor has the wrong number of objects");
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const Matrix& m = f.at(y, x);
      if (m.cols() != src.dim(y, x) || m.rows() != dst.dim(f.object_map[y], f.object_map[x])) {
        throw StructuralError("semifunctor matrix at " + src.object(y) + "|" + src.object(x) + " has the wrong shape");
      }
    }
  Report r("semifunctor");
  std::string w;
  for (std::size_t z = 0; z < n && w.empty(); ++z)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      for (std::size_t x = 0; x < n && w.empty(); ++x) {
        const std::size_t fz = f.object_map[z], fy = f.object_map[y], fx = f.object_map[x];
        for (std::size_t a = 0; a < src.dim(z, y) && w.empty(); ++a) {
          Vec fa = f.at(z, y).column(a);
          for (std::size_t b = 0; b < src.dim(y, x) && w.empty(); ++b) {
            Vec lhs = f.at(z, x).apply(src.compose(z, y, x, unit_vec(src.field(), src.dim(z, y), a),
                                                   unit_vec(src.field(), src.dim(y, x), b)));
            Vec rhs = dst.compose(fz, fy, fx, fa, f.at(y, x).column(b));
            if (lhs != rhs) {
              w = "F(" + src.basis_names(z, y)[a] + " o " + src.basis_names(y, x)[b] + ") != F(.) o F(.)";
            }
          }
        }
      }
  r.record("composition", w.empty(), w);
  if (src.is_category() && dst.is_category()) {
    w.clear();
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (f.at(x, x).apply(src.identity(x)) != dst.identity(f.object_map[x])) w = "F(1_" + src.object(x) + ")";
    r.record("identities", w.empty(), w);
  }
  return r;
}

/// Injective on every hom space.
inline bool is_faithful(const LinSemicat& src, const Semifunctor& f) {
  for (std::size_t y = 0; y < src.size(); ++y)
    for (std::size_t x = 0; x < src.size(); ++x)
      if (rank(f.at(y, x)) != src.dim(y, x)) return false;
  return true;
}

/// Bijective on every hom space.
inline bool is_hom_bijective(const LinSemicat& src, const Semifunctor& f) {
  for (std::size_t y = 0; y < src.size(); ++y)
    for (std::size_t x = 0; x < src.size(); ++x) {
      const Matrix& m = f.at(y, x);
      if (m.rows() != m.cols() || rank(m) != m.cols()) return false;
    }
  return true;
}

}  // namespace parthopf
