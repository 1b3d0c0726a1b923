#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "parthopf/core/matrix.hpp"

namespace parthopf {

/// Order-3 tensor T(i, j, k) over a Field, flat storage with k fastest.
///
/// The library uses it for every bilinear map on coordinate spaces:
/// multiplication m(i, j, k) = coefficient of b_k in b_i b_j, comultiplication
/// c(i, j, k) = coefficient of b_j (x) b_k in Delta(b_i), and composition
/// comp(a, b, c) = coefficient of basis c in a o b.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Field field, std::size_t d0, std::size_t d1, std::size_t d2)
      : field_(field), dims_{d0, d1, d2}, data_(d0 * d1 * d2, Scalar::zero(field)) {}

  Field field() const { return field_; }
  std::size_t dim(std::size_t axis) const { return dims_[axis]; }
  const std::array<std::size_t, 3>& dims() const { return dims_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dims_[1] + j) * dims_[2] + k];
  }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    bounds(i, j, k);
    return (*this)(i, j, k);
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    bounds(i, j, k);
    return (*this)(i, j, k);
  }

  /// The fiber T(i, j, .) as a span.
  std::span<const Scalar> fiber(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * dims_[1] + j) * dims_[2], dims_[2]};
  }

  /// Contract both leading slots against u and v: sum u_i v_j T(i, j, .).
  Vec contract(std::span<const Scalar> u, std::span<const Scalar> v) const {
    if (u.size() != dims_[0] || v.size() != dims_[1]) {
      throw StructuralError("Tensor3::contract: operand lengths do not match tensor dims");
    }
    Vec out = zero_vec(field_, dims_[2]);
    for (std::size_t i = 0; i < dims_[0]; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dims_[1]; ++j) {
        if (v[j].is_zero()) continue;
        const Scalar uv = u[i] * v[j];
        auto f = fiber(i, j);
        for (std::size_t k = 0; k < dims_[2]; ++k) {
          if (!f[k].is_zero()) out[k] += uv * f[k];
        }
      }
    }
    return out;
  }

  /// The tensor with the leading two slots exchanged: S(j, i, k) = T(i, j, k).
  Tensor3 swap_leading() const {
    Tensor3 s(field_, dims_[1], dims_[0], dims_[2]);
    for (std::size_t i = 0; i < dims_[0]; ++i)
      for (std::size_t j = 0; j < dims_[1]; ++j)
        for (std::size_t k = 0; k < dims_[2]; ++k) s(j, i, k) = (*this)(i, j, k);
    return s;
  }

  bool is_zero() const { return parthopf::is_zero(data_); }
  std::vector<Scalar>& entries() { return data_; }
  const std::vector<Scalar>& entries() const { return data_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }

 private:
  void bounds(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dims_[0] || j >= dims_[1] || k >= dims_[2]) {
      throw StructuralError("tensor index out of range");
    }
  }

  Field field_{};
  std::array<std::size_t, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

/// The nonzero entries of every fiber T(i, j, .), for products of basis
/// elements without scanning zeros.
class SparseFibers {
 public:
  using Entries = std::vector<std::pair<std::size_t, Scalar>>;

  explicit SparseFibers(const Tensor3& t) : dims_(t.dims()), fibers_(dims_[0] * dims_[1]) {
    for (std::size_t i = 0; i < dims_[0]; ++i)
      for (std::size_t j = 0; j < dims_[1]; ++j) {
        auto f = t.fiber(i, j);
        for (std::size_t k = 0; k < dims_[2]; ++k)
          if (!f[k].is_zero()) fibers_[i * dims_[1] + j].emplace_back(k, f[k]);
      }
  }

  std::size_t dim(std::size_t axis) const { return dims_[axis]; }
  const Entries& operator()(std::size_t i, std::size_t j) const { return fibers_[i * dims_[1] + j]; }

 private:
  std::array<std::size_t, 3> dims_;
  std::vector<Entries> fibers_;
};

/// First basis triple (i, j, k) where the two bracketings
/// lo(li(i, j), k) and ro(i, ri(j, k)) of a triple product disagree.
inline std::optional<std::array<std::size_t, 3>> first_bracketing_failure(const SparseFibers& li, const SparseFibers& lo,
                                                                          const SparseFibers& ri, const SparseFibers& ro,
                                                                          Field field) {
  const std::size_t n0 = li.dim(0), n1 = li.dim(1), n2 = lo.dim(1), out = lo.dim(2);
  if (ro.dim(0) != n0 || ri.dim(0) != n1 || ri.dim(1) != n2 || li.dim(2) != lo.dim(0) || ri.dim(2) != ro.dim(1) ||
      ro.dim(2) != out) {
    throw StructuralError("bracketing check: tensor dims do not chain");
  }
  Vec diff = zero_vec(field, out);
  std::vector<char> seen(out, 0);
  std::vector<std::size_t> touched;
  auto add = [&](std::size_t m, const Scalar& v, bool negate) {
    if (negate) diff[m] -= v;
    else diff[m] += v;
    if (!seen[m]) {
      seen[m] = 1;
      touched.push_back(m);
    }
  };
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k) {
        for (const auto& [l, c] : li(i, j))
          for (const auto& [m, d] : lo(l, k)) add(m, c * d, false);
        for (const auto& [l, c] : ri(j, k))
          for (const auto& [m, d] : ro(i, l)) add(m, c * d, true);
        bool equal = true;
        for (std::size_t m : touched) {
          if (!diff[m].is_zero()) equal = false;
          diff[m] = Scalar::zero(field);
          seen[m] = 0;
        }
        touched.clear();
        if (!equal) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

}  // namespace parthopf
