#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parthopf/core/matrix.hpp"

namespace parthopf {

/// Reduced row-echelon form with leftmost-nonzero, first-row pivoting.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

inline Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace detail {

inline std::size_t common_length(std::span<const Vec> vectors) {
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw StructuralError("vectors of different lengths");
  }
  return n;
}

}  // namespace detail

/// Reduced echelon basis of span(vectors). Deterministic: the same span
/// always yields the same basis, ordered by pivot position.
inline std::vector<Vec> image_basis(std::span<const Vec> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = detail::common_length(vectors);
  const Field field = vectors.front().empty() ? Field{} : vectors.front().front().field();
  if (n == 0) return {};
  Echelon e = rref(Matrix::from_rows(field, n, std::vector<Vec>(vectors.begin(), vectors.end())));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    auto r = e.reduced.row(i);
    basis.emplace_back(r.begin(), r.end());
  }
  return basis;
}

/// Basis of {v : m v = 0}, one vector per free column in increasing order.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  const Field field = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(field, m.cols());
    v[free] = Scalar::one(field);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients c with sum c_i span_i = v, or nullopt when v is outside the
/// span. When span is dependent the free coefficients are set to zero.
inline std::optional<Vec> solve_membership(std::span<const Scalar> v, std::span<const Vec> span) {
  const Field field = v.empty() ? (span.empty() || span.front().empty() ? Field{} : span.front().front().field())
                                : v.front().field();
  for (const auto& s : span) {
    if (s.size() != v.size()) throw StructuralError("solve_membership: dimension mismatch");
  }
  if (span.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  // Augmented system [S | v] with S having the span vectors as columns.
  Matrix aug(field, v.size(), span.size() + 1);
  for (std::size_t j = 0; j < span.size(); ++j) aug.set_column(j, span[j]);
  aug.set_column(span.size(), v);
  Echelon e = rref(std::move(aug));
  Vec coeffs = zero_vec(field, span.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == span.size()) return std::nullopt;
    coeffs[e.pivots[i]] = e.reduced(i, span.size());
  }
  return coeffs;
}

/// Columns of m solving m x = b for every column b of rhs, or nullopt.
inline std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw StructuralError("solve: row mismatch");
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  Matrix out(m.field(), m.cols(), rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto c = solve_membership(rhs.column(j), cols);
    if (!c) return std::nullopt;
    out.set_column(j, *c);
  }
  return out;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

/// A subspace of k^n carried as its reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}
  Subspace(Field field, std::size_t ambient, std::span<const Vec> spanning)
      : field_(field), ambient_(ambient), basis_(image_basis(spanning)) {
    for (const auto& v : spanning) {
      if (v.size() != ambient) throw StructuralError("Subspace: vector length differs from ambient");
    }
    compute_pivots();
  }

  static Subspace full(Field field, std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(field, n, i));
    return Subspace(field, n, e);
  }

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Coordinates of v in the echelon basis, or nullopt when v is outside.
  /// Echelon structure makes this a read-off at pivot columns plus a check.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw StructuralError("Subspace::coordinates: dimension mismatch");
    Vec c = zero_vec(field_, basis_.size());
    Vec residual(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      c[i] = residual[pivots_[i]];
      axpy(residual, -c[i], basis_[i]);
    }
    if (!parthopf::is_zero(residual)) return std::nullopt;
    return c;
  }

  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_) {
      if (!contains(v)) return false;
    }
    return true;
  }

  Vec element(std::span<const Scalar> coords) const {
    Vec v = zero_vec(field_, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords[i], basis_[i]);
    return v;
  }

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix inclusion() const { return Matrix::from_columns(field_, ambient_, basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  Subspace intersect(const Subspace& other) const {
    // Solve sum a_i u_i = sum b_j w_j; the a-part of each kernel vector
    // gives an element of the intersection.
    const std::size_t n = basis_.size();
    if (n == 0 || other.dim() == 0) return Subspace(field_, ambient_);
    Matrix m(field_, ambient_, n + other.dim());
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, basis_[j]);
    for (std::size_t j = 0; j < other.dim(); ++j) m.set_column(n + j, other.basis_[j]);
    std::vector<Vec> elems;
    for (const auto& k : kernel_basis(m)) elems.push_back(element(std::span(k).first(n)));
    return Subspace(field_, ambient_, elems);
  }

 private:
  void compute_pivots() {
    pivots_.clear();
    for (const auto& b : basis_) {
      std::size_t p = 0;
      while (b[p].is_zero()) ++p;
      pivots_.push_back(p);
    }
  }

  Field field_{};
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace parthopf
