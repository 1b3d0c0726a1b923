#pragma once

#include "parthopf/action/group_actions.hpp"

namespace parthopf {

/// Objects 1, 2, 3 with one-dimensional endomorphisms and single arrows
/// alpha: 1 -> 2, beta: 2 -> 3, gamma: 3 -> 1 whose pairwise composites
/// beta alpha, gamma beta, alpha gamma vanish.
inline LinSemicat three_cycle_category(Field field = Field::rationals()) {
  enum { O1 = 0, O2 = 1, O3 = 2 };
  LinSemicat c(field, {"1", "2", "3"}, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
  const Scalar one = Scalar::one(field);
  for (std::size_t x = 0; x < 3; ++x) {
    c.set_basis_names(x, x, {"1_" + c.object(x)});
    for (std::size_t y = 0; y < 3; ++y) {
      if (c.dim(y, x) == 0) continue;
      c.comp(y, y, x)(0, 0, 0) = one;  // 1_y o f
      c.comp(y, x, x)(0, 0, 0) = one;  // f o 1_x
    }
  }
  c.set_basis_names(O2, O1, {"alpha"});
  c.set_basis_names(O3, O2, {"beta"});
  c.set_basis_names(O1, O3, {"gamma"});
  c.set_identities({Vec{one}, Vec{one}, Vec{one}});
  return c;
}

/// k x k as a one-object category on the idempotent basis u1, u2.
inline LinSemicat product_point_category(Field field = Field::rationals()) {
  const Scalar one = Scalar::one(field);
  Algebra a{field, {"u1", "u2"}, Tensor3(field, 2, 2, 2), Vec{one, one}};
  a.mult(0, 0, 0) = one;
  a.mult(1, 1, 1) = one;
  return from_algebra(a);
}

/// The global kC2 action on k x k in which the generator swaps the factors.
inline HopfAction swap_action(Field field = Field::rationals()) {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  HopfAction ga{product_point_category(field), build_group_algebra(c2, field), {}};
  Matrix swap(field, 2, 2);
  swap(0, 1) = Scalar::one(field);
  swap(1, 0) = Scalar::one(field);
  ga.act = {{{Matrix::identity(field, 2), swap}}};
  return ga;
}

/// Two objects with one-dimensional endomorphisms and no arrows between them.
inline LinSemicat two_point_category(Field field = Field::rationals()) {
  LinSemicat c(field, {"a", "b"}, {{1, 0}, {0, 1}});
  const Scalar one = Scalar::one(field);
  c.comp(0, 0, 0)(0, 0, 0) = one;
  c.comp(1, 1, 1)(0, 0, 0) = one;
  c.set_identities({Vec{one}, Vec{one}});
  return c;
}

}  // namespace parthopf
