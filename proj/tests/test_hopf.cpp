#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parthopf;

namespace {

struct Named {
  std::string name;
  HopfAlgebra h;
};

std::vector<Named> catalog(Field f = Field::rationals()) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back({"kC" + std::to_string(n), build_group_algebra(FiniteGroup::cyclic(n), f)});
    out.push_back({"k^C" + std::to_string(n), build_dual_group_hopf(FiniteGroup::cyclic(n), f)});
  }
  out.push_back({"kS3", build_group_algebra(FiniteGroup::symmetric(3), f)});
  out.push_back({"k^S3", build_dual_group_hopf(FiniteGroup::symmetric(3), f)});
  out.push_back({"H4", build_sweedler(f)});
  return out;
}

}  // namespace

TEST(Hopf, CatalogPassesEveryAxiom) {
  for (Field f : {Field::rationals(), Field::prime(7)})
    for (const auto& [name, h] : catalog(f)) {
      Report r = verify_hopf(h);
      EXPECT_TRUE(r.ok()) << name << "\n" << r.to_text();
      EXPECT_EQ(r.checks().size(), 10u);
    }
}

TEST(Hopf, RandomMutationsAreDetected) {
  std::mt19937 rng(2024);
  for (const auto& [name, h] : catalog()) {
    for (int trial = 0; trial < 20; ++trial) {
      oracle::Mutation mu{};
      HopfAlgebra m = oracle::mutate(h, rng, &mu);
      EXPECT_FALSE(verify_hopf(m).ok())
          << name << " mutation target " << mu.target << " at " << mu.i << "," << mu.j << "," << mu.k;
    }
  }
}

TEST(Hopf, MutationWitnessNamesAxiom) {
  const Field Q = Field::rationals();
  HopfAlgebra h = build_group_algebra(FiniteGroup::cyclic(2), Q);
  h.mult(1, 1, 0) = Scalar(Q, 2L);
  Report r = verify_hopf(h);
  ASSERT_FALSE(r.ok());
  EXPECT_FALSE(r.passed("comultiplication-multiplicative"));
  EXPECT_FALSE(r.first_failure()->witness.empty());
}

TEST(Hopf, Cocommutativity) {
  EXPECT_TRUE(is_cocommutative(build_group_algebra(FiniteGroup::symmetric(3))));
  EXPECT_FALSE(is_cocommutative(build_dual_group_hopf(FiniteGroup::symmetric(3))));
  EXPECT_TRUE(is_cocommutative(build_dual_group_hopf(FiniteGroup::cyclic(4))));
  EXPECT_FALSE(is_cocommutative(build_sweedler()));
}

TEST(Hopf, DualOfGroupAlgebraIsDualGroup) {
  for (const char* g : {"C3", "C2xC2", "S3"}) {
    FiniteGroup grp = FiniteGroup::by_name(g);
    HopfAlgebra d = dualize(build_group_algebra(grp));
    HopfAlgebra e = build_dual_group_hopf(grp);
    EXPECT_TRUE(d.mult == e.mult && d.comult == e.comult && d.unit == e.unit && d.counit == e.counit &&
                d.antipode == e.antipode)
        << g;
  }
}

TEST(Hopf, DoubleDualIsOriginal) {
  for (const auto& [name, h] : catalog()) {
    HopfAlgebra dd = dualize(dualize(h));
    EXPECT_TRUE(dd.mult == h.mult && dd.comult == h.comult && dd.antipode == h.antipode) << name;
    EXPECT_TRUE(verify_hopf(dualize(h)).ok()) << name;
  }
}

TEST(Hopf, SweedlerAntipodeHasOrderFour) {
  HopfAlgebra h = build_sweedler();
  Matrix s = h.antipode;
  Matrix s2 = s * s;
  EXPECT_FALSE(s2 == Matrix::identity(h.field, 4));
  EXPECT_EQ(s2 * s2, Matrix::identity(h.field, 4));
}

TEST(Hopf, SweedlerNeedsOddCharacteristic) {
  EXPECT_THROW(build_sweedler(Field::prime(2)), UnsupportedFieldError);
  EXPECT_TRUE(verify_hopf(build_sweedler(Field::prime(3))).ok());
}

TEST(Hopf, AntipodeIsConvolutionInverseOfIdentity) {
  for (const auto& [name, h] : catalog()) {
    const std::size_t n = h.dim();
    Matrix id = Matrix::identity(h.field, n);
    Matrix left = convolution_compose(h, h.antipode, id, h.mult);
    EXPECT_EQ(left, counit_map(h, h.unit)) << name;
  }
}

TEST(Hopf, ShapeMismatchIsStructural) {
  HopfAlgebra h = build_sweedler();
  h.counit.pop_back();
  EXPECT_THROW(verify_hopf(h), StructuralError);
}
