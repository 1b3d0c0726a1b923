#include <gtest/gtest.h>

#include "examples.hpp"
#include "oracles.hpp"

using namespace parthopf;

namespace {

const Field Q = Field::rationals();

HopfAction cycle(std::size_t n) { return build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(n)); }

}  // namespace

TEST(PartialSmash, ThreeCycleHomSpacesAreLines) {
  HopfAction pa = cycle(2);
  PartialSmash s = partial_smash(pa);
  EXPECT_TRUE(verify_partial_smash(pa, s).ok());
  EXPECT_TRUE(s.smash.is_category());
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(s.smash.dim(y, x), pa.cat.dim(y, x)) << y << x;
  MatrixAlgebra a = matrix_algebra(s.smash);
  EXPECT_EQ(a.algebra.dim(), 6u);
  EXPECT_TRUE(verify_algebra(a.algebra).ok());
}

TEST(PartialSmash, DimensionsMatchNormalFormOracle) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    LambdaData l = lambda_of(pa);
    if (!l.induced_by_k) continue;
    PartialSmash s = partial_smash(pa);
    for (std::size_t y = 0; y < pa.cat.size(); ++y)
      for (std::size_t x = 0; x < pa.cat.size(); ++x) {
        Vec lambda(pa.hopf.dim(), Scalar::zero(Q));
        for (std::size_t i = 0; i < pa.hopf.dim(); ++i) lambda[i] = pa.lambda(x, i)[0];
        if (pa.cat.dim(x, x) != 1) continue;
        EXPECT_EQ(s.smash.dim(y, x), pa.cat.dim(y, x) * oracle::point_smash_dim(pa.hopf, lambda)) << name;
      }
  }
}

TEST(PartialSmash, PointDimensionsForSubgroups) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  for (auto& r : classify_dual_on_point(s3, Q))
    EXPECT_EQ(partial_smash(r.action).smash.dim(0, 0), 6 / r.subgroup.order());
  for (auto& r : classify_group_algebra_on_point(s3, Q))
    EXPECT_EQ(partial_smash(r.action).smash.dim(0, 0), r.subgroup.order());
}

TEST(PartialSmash, EveryClassifiedActionGivesUnitalCategory) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    PartialSmash s = partial_smash(pa);
    Report r = verify_partial_smash(pa, s);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.to_text();
    EXPECT_TRUE(s.smash.is_category()) << name;
    EXPECT_TRUE(smash_left_unit(pa, s.tensor).ok()) << name;
  }
}

TEST(PartialSmash, RejectsInvalidAction) {
  HopfAction pa = cycle(2);
  pa.act[1][0][1](0, 0) = Scalar(Q, 1L, 3L);
  EXPECT_THROW(partial_smash(pa), RejectedError);
}

TEST(GlobalSmash, GroupGradingOfGroupAlgebra) {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  DualPointGlobalization model = dual_point_globalization(c2, FiniteGroup::cyclic(2).subgroup({0, 1}), Q);
  LinSemicat bh = global_smash(model.glob.global);
  EXPECT_EQ(bh.dim(0, 0), 4u);
  EXPECT_TRUE(verify_semicat(bh).ok());
  EXPECT_TRUE(bh.is_category());
}

TEST(GlobalSmash, RejectsPartialAction) {
  EXPECT_THROW(global_smash(cycle(2)), RejectedError);
}

TEST(MatrixSmash, IsomorphismOnThreeCycle) {
  MatrixSmashIso iso = matrix_smash_iso(cycle(2));
  EXPECT_EQ(iso.target.algebra.dim(), 6u);
  EXPECT_EQ(iso.source.dim(0, 0), 6u);
  Report r = verify_matrix_smash_iso(iso);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(iso.phi * iso.psi, Matrix::identity(Q, 6));
  EXPECT_EQ(iso.psi * iso.phi, Matrix::identity(Q, 6));
}

TEST(MatrixSmash, IsomorphismOnEveryClassifiedAction) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    Report r = verify_matrix_smash_iso(matrix_smash_iso(pa));
    EXPECT_TRUE(r.ok()) << name << "\n" << r.to_text();
  }
}

TEST(MatrixSmash, MutatedTargetBreaksMultiplicativity) {
  MatrixSmashIso iso = matrix_smash_iso(cycle(2));
  iso.target.algebra.mult(0, 0, 0) += Scalar::one(Q);
  Report r = verify_matrix_smash_iso(iso);
  EXPECT_FALSE(r.passed("phi-multiplicative") && r.passed("psi-multiplicative"));
}

TEST(MatrixSmash, MatrixActionIsPartial) {
  HopfAction m = matrix_partial_action(cycle(3));
  EXPECT_EQ(m.cat.size(), 1u);
  EXPECT_TRUE(verify_partial_action(m).ok());
}

TEST(HStar, ActionIsGlobal) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    PartialSmash s = partial_smash(pa);
    HopfAction hs = hstar_action(pa, s);
    Report r = verify_global_action(hs);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.to_text();
    for (const char* axiom : {"H1", "H2", "H3", "H4"}) EXPECT_TRUE(r.passed(axiom)) << name << " " << axiom;
  }
}

TEST(EmbedSmash, FaithfulSemifunctorIntoGlobalSmash) {
  for (std::size_t n : {2u, 3u}) {
    HopfAction pa = cycle(n);
    Globalization g = standard_globalization(pa);
    PartialSmash s = partial_smash(pa);
    Semifunctor phi = embed_smash(pa, g, s);
    LinSemicat bh = global_smash(g.global);
    EXPECT_TRUE(verify_semifunctor(s.smash, bh, phi).passed("composition"));
    EXPECT_TRUE(is_faithful(s.smash, phi));
    Semifunctor broken = phi;
    broken.map[0][0] = broken.map[0][0] + broken.map[0][0];
    EXPECT_FALSE(verify_semifunctor(s.smash, bh, broken).passed("composition"));
  }
}

TEST(Morita, EveryClassifiedActionAtEveryObject) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    Globalization g = standard_globalization(pa);
    for (std::size_t x = 0; x < pa.cat.size(); ++x) {
      SmashMorita m = smash_morita_context(pa, g, x);
      EXPECT_TRUE(m.ok()) << name << "\n" << m.report.to_text();
      EXPECT_TRUE(m.report.passed("associativity-M") && m.report.passed("associativity-N")) << name;
      EXPECT_TRUE(m.status.tau_surjective && m.status.sigma_surjective) << name;
      EXPECT_TRUE(verify_algebra(linking_algebra(m.context)).ok()) << name;
    }
  }
}

TEST(Morita, FullSupportDualPointShapes) {
  HopfAction pa = classify_dual_on_point(FiniteGroup::cyclic(3), Q)[1].action;
  Globalization g = standard_globalization(pa);
  SmashMorita m = smash_morita_context(pa, g, 0);
  EXPECT_EQ(m.context.A.dim(), 1u);
  EXPECT_EQ(m.context.B.dim(), 9u);
  EXPECT_EQ(m.m.dim(), 3u);
  EXPECT_EQ(m.n.dim(), 3u);
}

TEST(Morita, RejectsBrokenGlobalization) {
  HopfAction pa = cycle(2);
  Globalization g = standard_globalization(pa);
  g.F[1][1] = g.F[1][1] + g.F[1][1];
  EXPECT_THROW(smash_morita_context(pa, g, 1), RejectedError);
}

TEST(DCategory, IsomorphicToSmashForEveryClassifiedAction) {
  for (const auto& [name, pa] : examples::classified_actions()) {
    DCategory d = build_D_category(pa, standard_globalization(pa));
    EXPECT_TRUE(d.ok()) << name << "\n" << d.report.to_text();
    for (const char* c : {"G-lands-in-D", "G-bijective", "G-functorial", "G-identities"})
      EXPECT_TRUE(d.report.passed(c)) << name << " " << c;
  }
}

TEST(Pipeline, CertificateForThreeCycle) {
  Certificate c = run_pipeline(cycle(2));
  EXPECT_TRUE(c.ok());
  ASSERT_EQ(c.stages.size(), 5u);
  EXPECT_EQ(c.stages[0].name, "action");
  EXPECT_EQ(c.stages[4].name, "D");
}

TEST(Pipeline, HaltsAtFirstFailure) {
  HopfAction pa = cycle(2);
  pa.act[1][0][1](0, 0) = Scalar(Q, 1L, 3L);
  Certificate c = run_pipeline(pa);
  EXPECT_FALSE(c.ok());
  ASSERT_EQ(c.stages.size(), 1u);
  EXPECT_EQ(c.halted()->name, "action");
}
