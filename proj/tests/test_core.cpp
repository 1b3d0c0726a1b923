#include <gtest/gtest.h>

#include <random>

#include "parthopf/parthopf.hpp"

using namespace parthopf;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int sparsity = 3) {
  std::uniform_int_distribution<long> val(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> keep(0, sparsity);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m(i, j) = Scalar(f, val(rng), den(rng));
  return m;
}

}  // namespace

TEST(Scalar, RationalArithmetic) {
  const Field Q = Field::rationals();
  Scalar a(Q, 1L, 2L), b(Q, -3L, 4L);
  EXPECT_EQ((a + b).to_string(), "-1/4");
  EXPECT_EQ((a * b).to_string(), "-3/8");
  EXPECT_EQ((a / b).to_string(), "-2/3");
  EXPECT_EQ(b.inverse() * b, Scalar::one(Q));
  EXPECT_THROW(Scalar::zero(Q).inverse(), StructuralError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field F7 = Field::prime(7);
  Scalar half(F7, 1L, 2L);
  EXPECT_EQ(half.residue(), 4u);
  EXPECT_EQ(half + half, Scalar::one(F7));
  EXPECT_EQ(Scalar(F7, -1L).residue(), 6u);
  EXPECT_EQ(Scalar(F7, 1L, 3L).to_string(), "5 mod 7");
  EXPECT_THROW(Scalar(F7, 1L, 7L), UnsupportedFieldError);
  EXPECT_THROW(Field::prime(8), UnsupportedFieldError);
}

TEST(Scalar, ParseRoundTrip) {
  for (Field f : {Field::rationals(), Field::prime(11)})
    for (long n = -6; n <= 6; ++n)
      for (long d : {1L, 2L, 3L, 5L}) {
        Scalar s(f, n, d);
        EXPECT_EQ(Scalar::parse(f, s.to_string()), s);
      }
  EXPECT_THROW(Scalar::parse(Field::prime(5), "2 mod 7"), StructuralError);
  EXPECT_THROW(Scalar::parse(Field::rationals(), "x"), StructuralError);
  EXPECT_EQ(Field::parse("gf:13"), Field::prime(13));
  EXPECT_EQ(Field::parse("q"), Field::rationals());
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar(Field::prime(3), 1L) + Scalar(Field::prime(5), 1L), StructuralError);
}

TEST(Matrix, KroneckerMatchesDefinition) {
  const Field Q = Field::rationals();
  std::mt19937 rng(7);
  Matrix a = random_matrix(Q, 2, 3, rng, 1), b = random_matrix(Q, 3, 2, rng, 1);
  Matrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Matrix, ShapeErrors) {
  const Field Q = Field::rationals();
  EXPECT_THROW(Matrix(Q, 2, 3) * Matrix(Q, 2, 3), StructuralError);
  EXPECT_THROW(Matrix(Q, 2, 3).apply(Vec(2, Scalar::zero(Q))), StructuralError);
}

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RankNullityAndKernel) {
  std::mt19937 rng(GetParam());
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    Matrix m = random_matrix(f, dim(rng), dim(rng), rng);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), m.cols());
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST_P(LinalgProperty, SolveAndInverse) {
  std::mt19937 rng(GetParam() + 100);
  const Field Q = Field::rationals();
  Matrix m = random_matrix(Q, 4, 4, rng, 1);
  Matrix x = random_matrix(Q, 4, 2, rng, 1);
  Matrix rhs = m * x;
  auto sol = solve(m, rhs);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(m * *sol, rhs);
  auto inv = inverse(m);
  EXPECT_EQ(inv.has_value(), rank(m) == 4);
  if (inv) {
    EXPECT_EQ(m * *inv, Matrix::identity(Q, 4));
  }
}

TEST_P(LinalgProperty, SubspaceMembershipAndIntersection) {
  std::mt19937 rng(GetParam() + 200);
  const Field Q = Field::rationals();
  Matrix a = random_matrix(Q, 5, 3, rng, 1), b = random_matrix(Q, 5, 3, rng, 1);
  std::vector<Vec> ca, cb;
  for (std::size_t j = 0; j < 3; ++j) {
    ca.push_back(a.column(j));
    cb.push_back(b.column(j));
  }
  Subspace sa(Q, 5, ca), sb(Q, 5, cb);
  for (const auto& v : ca) {
    auto c = sa.coordinates(v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(sa.element(*c), v);
  }
  Subspace i = sa.intersect(sb);
  EXPECT_TRUE(sa.contains(i));
  EXPECT_TRUE(sb.contains(i));
  std::vector<Vec> both = ca;
  both.insert(both.end(), cb.begin(), cb.end());
  EXPECT_EQ(sa.dim() + sb.dim(), Subspace(Q, 5, both).dim() + i.dim());
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Range(0, 12));

TEST(Linalg, SingularSystemHasNoSolution) {
  const Field Q = Field::rationals();
  Matrix m = Matrix::from_rows(Q, 2, {{Scalar(Q, 1L), Scalar(Q, 1L)}, {Scalar(Q, 2L), Scalar(Q, 2L)}});
  Matrix rhs(Q, 2, 1);
  rhs(0, 0) = Scalar(Q, 1L);
  EXPECT_FALSE(solve(m, rhs).has_value());
  EXPECT_FALSE(inverse(m).has_value());
}

TEST(Tensor, ContractIsBilinear) {
  const Field Q = Field::rationals();
  Tensor3 t(Q, 2, 2, 2);
  t(0, 1, 1) = Scalar(Q, 3L);
  t(1, 1, 0) = Scalar(Q, -1L);
  Vec u{Scalar(Q, 1L), Scalar(Q, 2L)}, v{Scalar(Q, 0L), Scalar(Q, 1L)};
  Vec r = t.contract(u, v);
  EXPECT_EQ(r[0], Scalar(Q, -2L));
  EXPECT_EQ(r[1], Scalar(Q, 3L));
  EXPECT_THROW(t.at(2, 0, 0), StructuralError);
}

TEST(Report, TextFormat) {
  Report r("demo");
  r.pass("a");
  r.fail("b", "witness");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.to_text(), "# demo\nPASS a\nFAIL b: witness\n");
  EXPECT_EQ(r.first_failure()->name, "b");
}
