#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "parthopf/core/scalar.hpp"

namespace parthopf {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(Field field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

inline Vec unit_vec(Field field, std::size_t n, std::size_t i) {
  Vec v = zero_vec(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

inline void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw StructuralError("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

inline Vec scaled(const Scalar& a, std::span<const Scalar> x) {
  Vec out(x.begin(), x.end());
  for (auto& s : out) s *= a;
  return out;
}

inline Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw StructuralError("add: length mismatch");
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw StructuralError("sub: length mismatch");
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

inline std::string to_string(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

/// Dense row-major matrix over a single Field. Also serves as the carrier
/// for every linear map in the library (action operators, functors, ...).
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw StructuralError("from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Scalar& at(std::size_t i, std::size_t j) {
    bounds(i, j);
    return data_[i * cols_ + j];
  }
  const Scalar& at(std::size_t i, std::size_t j) const {
    bounds(i, j);
    return data_[i * cols_ + j];
  }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  void set_column(std::size_t j, std::span<const Scalar> v) {
    if (v.size() != rows_ || j >= cols_) throw StructuralError("set_column: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  const std::vector<Scalar>& entries() const { return data_; }

  Vec apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) {
      throw StructuralError("apply: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " matrix on vector of length " + std::to_string(v.size()));
    }
    Vec out = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = (*this)(i, j);
        if (!a.is_zero()) out[i] += a * v[j];
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool is_zero() const { return parthopf::is_zero(data_); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw StructuralError("matrix product: inner dimensions " + std::to_string(a.cols_) +
                            " and " + std::to_string(b.rows_) + " differ");
    }
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Kronecker product; row index (i, k) maps to i * b.rows() + k.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const Scalar& aij = a(i, j);
        if (aij.is_zero()) continue;
        for (std::size_t k = 0; k < b.rows_; ++k) {
          for (std::size_t l = 0; l < b.cols_; ++l) {
            c(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
          }
        }
      }
    }
    return c;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ", ";
      s += parthopf::to_string(row(i));
    }
    return s + "]";
  }

 private:
  void bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  }
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw StructuralError("matrix shapes differ");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using LinMap = Matrix;

}  // namespace parthopf
