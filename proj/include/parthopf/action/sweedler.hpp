#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parthopf/action/group_actions.hpp"

namespace parthopf {

/// Residuals of conditions (a), (b), (c) for Lambda: H -> k, in a fixed order.
/// Each residual is a polynomial of degree <= 2 in the entries of Lambda.
inline std::vector<std::pair<std::string, Scalar>> lambda_residuals(const HopfAlgebra& h, const Vec& L) {
  const Field F = h.field;
  const std::size_t d = h.dim();
  auto value = [&](std::span<const Scalar> v) {
    Scalar s = Scalar::zero(F);
    for (std::size_t i = 0; i < d; ++i) s += v[i] * L[i];
    return s;
  };
  std::vector<std::pair<std::string, Scalar>> out;
  out.emplace_back("(a)", value(h.unit) - Scalar::one(F));
  for (std::size_t l = 0; l < d; ++l) {
    Scalar conv = Scalar::zero(F);
    for (auto [i, j, c] : h.coproduct_terms(l)) conv += c * L[i] * L[j];
    out.emplace_back("(b)" + h.basis[l], conv - L[l]);
  }
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t m = 0; m < d; ++m) {
      Scalar first = Scalar::zero(F);
      Scalar second = Scalar::zero(F);
      for (auto [i, j, c] : h.coproduct_terms(l)) {
        first += c * L[i] * value(h.basis_product(j, m));
        second += c * value(h.basis_product(i, m)) * L[j];
      }
      const Scalar lhs = L[l] * L[m];
      out.emplace_back("(c)" + h.basis[l] + "," + h.basis[m] + ":1", first - lhs);
      out.emplace_back("(c)" + h.basis[l] + "," + h.basis[m] + ":2", second - lhs);
    }
  return out;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

/// Square roots of s in the field of s (Tonelli-Shanks over GF(p)).
inline std::optional<Scalar> square_root(const Scalar& s) {
  const Field F = s.field();
  if (s.is_zero()) return s;
  if (F.characteristic == 0) {
    mpz_class num = s.rational().get_num();
    mpz_class den = s.rational().get_den();
    if (num < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar(F, mpq_class(rn, rd));
  }
  const std::uint64_t p = F.characteristic;
  const std::uint64_t a = s.residue();
  if (p == 2) return s;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1, e = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++e;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = e, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return Scalar(F, mpq_class(mpz_class(std::to_string(r))));
}

/// Distinct roots of c2 a^2 + c1 a + c0, sorted by string form for stability.
/// Returns nullopt when the polynomial vanishes identically.
inline std::optional<std::vector<Scalar>> quadratic_roots(const Scalar& c2, const Scalar& c1, const Scalar& c0) {
  const Field F = c0.field();
  std::vector<Scalar> roots;
  if (c2.is_zero()) {
    if (c1.is_zero()) {
      if (c0.is_zero()) return std::nullopt;
      return roots;
    }
    roots.push_back(-c0 / c1);
    return roots;
  }
  const Scalar disc = c1 * c1 - Scalar(F, 4L) * c2 * c0;
  auto sq = square_root(disc);
  if (!sq) return roots;
  const Scalar two_a = Scalar(F, 2L) * c2;
  roots.push_back((-c1 + *sq) / two_a);
  if (!sq->is_zero()) roots.push_back((-c1 - *sq) / two_a);
  return roots;
}

}  // namespace detail

/// The solution set of conditions (a)-(c) for H4 acting on k, derived from
/// the structure constants: (a) and (b)e2 give a quadratic in lambda_e1 whose
/// roots split the problem; on each branch the residuals that are affine in
/// (lambda_h1, lambda_h2) are solved and every residual is then checked to
/// vanish identically on the resulting affine set.
struct SweedlerBranch {
  Scalar lambda_e1;
  Vec point;                   // (lambda_h1, lambda_h2) particular solution
  std::vector<Vec> directions; // free directions in (lambda_h1, lambda_h2)
  bool all_residuals_vanish = false;
};

struct SweedlerClassification {
  std::vector<std::string> labels;
  std::vector<HopfAction> actions;
  std::vector<SweedlerBranch> branches;
  Report exhaustiveness;
};

inline std::vector<SweedlerBranch> solve_sweedler_on_point(const HopfAlgebra& h) {
  const Field F = h.field;
  const std::size_t E1 = h.index_of("e1"), E2 = h.index_of("e2"), H1 = h.index_of("h1"), H2 = h.index_of("h2");
  auto lam = [&](const Scalar& a, const Scalar& c, const Scalar& d) {
    Vec L = zero_vec(F, 4);
    L[E1] = a;
    L[E2] = Scalar::one(F) - a;
    L[H1] = c;
    L[H2] = d;
    return L;
  };
  const Scalar zero = Scalar::zero(F), one = Scalar::one(F);
  auto be2 = [&](const Scalar& a) {
    for (const auto& [name, v] : lambda_residuals(h, lam(a, zero, zero)))
      if (name == "(b)e2") return v;
    throw StructuralError("missing (b)e2 residual");
  };
  const Scalar r0 = be2(zero), r1 = be2(one), rm = be2(-one);
  const Scalar half = Scalar(F, 1L, 2L);
  const Scalar c2 = half * (r1 + rm) - r0;
  const Scalar c1 = half * (r1 - rm);
  auto roots = detail::quadratic_roots(c2, c1, r0);
  if (!roots) throw StructuralError("(b)e2 vanishes identically; the branch analysis does not apply");

  std::vector<SweedlerBranch> out;
  for (const Scalar& a : *roots) {
    auto res = [&](const Scalar& c, const Scalar& d) { return lambda_residuals(h, lam(a, c, d)); };
    auto at00 = res(zero, zero), at10 = res(one, zero), at01 = res(zero, one);
    auto at11 = res(one, one), at20 = res(Scalar(F, 2L), zero), at02 = res(zero, Scalar(F, 2L));
    std::vector<Vec> rows;
    Vec rhs_entries;
    for (std::size_t k = 0; k < at00.size(); ++k) {
      const Scalar alpha = at10[k].second - at00[k].second;
      const Scalar beta = at01[k].second - at00[k].second;
      const bool affine = at11[k].second == at00[k].second + alpha + beta &&
                          at20[k].second == at00[k].second + Scalar(F, 2L) * alpha &&
                          at02[k].second == at00[k].second + Scalar(F, 2L) * beta;
      if (affine) {
        rows.push_back(Vec{alpha, beta});
        rhs_entries.push_back(-at00[k].second);
      }
    }
    Matrix m = Matrix::from_rows(F, 2, rows);
    Matrix rhs(F, rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) rhs(i, 0) = rhs_entries[i];
    auto sol = solve(m, rhs);
    if (!sol) continue;
    SweedlerBranch br{a, sol->column(0), kernel_basis(m), true};
    std::vector<std::pair<Scalar, Scalar>> grid;
    if (br.directions.empty()) grid = {{zero, zero}};
    else if (br.directions.size() == 1) grid = {{zero, zero}, {one, zero}, {Scalar(F, 2L), zero}};
    else grid = {{zero, zero}, {one, zero}, {Scalar(F, 2L), zero}, {zero, one}, {zero, Scalar(F, 2L)}, {one, one}};
    for (const auto& [s, t] : grid) {
      Vec p = br.point;
      if (!br.directions.empty()) axpy(p, s, br.directions[0]);
      if (br.directions.size() > 1) axpy(p, t, br.directions[1]);
      for (const auto& [name, v] : res(p[0], p[1]))
        if (!v.is_zero()) br.all_residuals_vanish = false;
    }
    out.push_back(std::move(br));
  }
  return out;
}

/// The epsilon-action plus one action Lambda = (1/2, 1/2, 0, alpha) per alpha,
/// and an exhaustiveness report matching the solution set against these two
/// shapes.
inline SweedlerClassification classify_sweedler_on_point(const std::vector<Scalar>& alphas,
                                                         Field field = Field::rationals()) {
  HopfAlgebra h = build_sweedler(field);
  const Scalar zero = Scalar::zero(field), one = Scalar::one(field), half = Scalar(field, 1L, 2L);
  SweedlerClassification out;
  out.labels.push_back("epsilon");
  out.actions.push_back(action_on_point(h, h.counit));
  for (const auto& a : alphas) {
    if (a.field() != field) throw StructuralError("alpha over a different field");
    out.labels.push_back("alpha=" + a.to_string());
    out.actions.push_back(action_on_point(h, Vec{half, half, zero, a}));
  }
  out.branches = solve_sweedler_on_point(h);
  out.exhaustiveness = Report("sweedler exhaustiveness");
  std::vector<std::string> roots;
  for (const auto& b : out.branches) roots.push_back(b.lambda_e1.to_string());
  std::sort(roots.begin(), roots.end());
  std::vector<std::string> expect{one.to_string(), half.to_string()};
  std::sort(expect.begin(), expect.end());
  out.exhaustiveness.record("e1-roots", roots == expect, "lambda_e1 roots differ from {1, 1/2}");
  bool eps = false;
  bool fam = false;
  for (const auto& b : out.branches) {
    if (b.lambda_e1 == one) {
      eps = b.all_residuals_vanish && b.directions.empty() && is_zero(b.point);
    } else if (b.lambda_e1 == half) {
      fam = b.all_residuals_vanish && b.directions.size() == 1 && b.point[0].is_zero() &&
            b.directions[0][0].is_zero() && !b.directions[0][1].is_zero();
    }
  }
  out.exhaustiveness.record("epsilon-branch", eps, "lambda_e1 = 1 does not force the epsilon-action");
  out.exhaustiveness.record("alpha-branch", fam, "lambda_e1 = 1/2 does not give (1/2, 1/2, 0, alpha)");
  return out;
}

}  // namespace parthopf
