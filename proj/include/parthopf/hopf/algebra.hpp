#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parthopf/core/linalg.hpp"
#include "parthopf/core/report.hpp"
#include "parthopf/core/tensor.hpp"

namespace parthopf {

/// Finite-dimensional associative algebra by structure constants
/// mult(i, j, k) = coefficient of b_k in b_i b_j. The unit is optional so the
/// same type carries the non-unital algebras that semicategories produce.
struct Algebra {
  Field field;
  std::vector<std::string> basis;
  Tensor3 mult;
  std::optional<Vec> unit;

  std::size_t dim() const { return basis.size(); }

  Vec multiply(std::span<const Scalar> u, std::span<const Scalar> v) const { return mult.contract(u, v); }

  Vec basis_product(std::size_t i, std::size_t j) const {
    auto f = mult.fiber(i, j);
    return {f.begin(), f.end()};
  }

  static Algebra zero_algebra(Field field, std::size_t dim, std::vector<std::string> names = {}) {
    if (names.empty()) {
      for (std::size_t i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i));
    }
    return Algebra{field, std::move(names), Tensor3(field, dim, dim, dim), std::nullopt};
  }
};

inline std::string basis_label(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : std::to_string(i);
}

/// Associativity on all basis triples, and both unit laws when a unit is
/// present.
inline Report verify_algebra(const Algebra& a) {
  Report r("algebra");
  const std::size_t n = a.dim();
  if (a.mult.dim(0) != n || a.mult.dim(1) != n || a.mult.dim(2) != n) {
    throw StructuralError("algebra structure constants do not match its dimension");
  }
  std::string witness;
  const SparseFibers m(a.mult);
  if (auto t = first_bracketing_failure(m, m, m, m, a.field)) {
    const auto [i, j, k] = *t;
    witness = "(" + basis_label(a.basis, i) + " " + basis_label(a.basis, j) + ") " + basis_label(a.basis, k) +
              " != " + basis_label(a.basis, i) + " (" + basis_label(a.basis, j) + " " + basis_label(a.basis, k) + ")";
  }
  r.record("associativity", witness.empty(), witness);
  if (a.unit) {
    if (a.unit->size() != n) throw StructuralError("algebra unit has the wrong length");
    witness.clear();
    for (std::size_t i = 0; i < n && witness.empty(); ++i) {
      Vec e = unit_vec(a.field, n, i);
      if (a.multiply(*a.unit, e) != e) witness = "1 " + basis_label(a.basis, i) + " != " + basis_label(a.basis, i);
      else if (a.multiply(e, *a.unit) != e) witness = basis_label(a.basis, i) + " 1 != " + basis_label(a.basis, i);
    }
    r.record("unit", witness.empty(), witness);
  }
  return r;
}

/// Checks that the linear map phi (dst.dim x src.dim) is multiplicative on
/// all basis pairs and, when both algebras are unital, sends 1 to 1.
inline Report verify_algebra_morphism(const Algebra& src, const Algebra& dst, const Matrix& phi) {
  Report r("algebra morphism");
  if (phi.rows() != dst.dim() || phi.cols() != src.dim()) {
    throw StructuralError("algebra morphism matrix has the wrong shape");
  }
  std::string witness;
  for (std::size_t i = 0; i < src.dim() && witness.empty(); ++i) {
    Vec pi = phi.column(i);
    for (std::size_t j = 0; j < src.dim() && witness.empty(); ++j) {
      Vec lhs = phi.apply(src.basis_product(i, j));
      Vec rhs = dst.multiply(pi, phi.column(j));
      if (lhs != rhs) {
        witness = "phi(" + basis_label(src.basis, i) + " " + basis_label(src.basis, j) + ") = " +
                  to_string(lhs) + " but phi(.)phi(.) = " + to_string(rhs);
      }
    }
  }
  r.record("multiplicative", witness.empty(), witness);
  if (src.unit && dst.unit) {
    Vec img = phi.apply(*src.unit);
    r.record("unital", img == *dst.unit, "phi(1) = " + to_string(img));
  }
  return r;
}

}  // namespace parthopf
