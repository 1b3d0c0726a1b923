#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parthopf;

namespace {

const Field Q = Field::rationals();
const char* const kClassified[] = {"C2", "C3", "C4", "C2xC2", "S3"};

Vec lambda_vec(std::initializer_list<Scalar> l) { return Vec(l); }
Scalar q(long n, long d = 1) { return Scalar(Q, n, d); }

std::vector<Index> support(const HopfAction& pa) {
  std::vector<Index> s;
  for (std::size_t i = 0; i < pa.hopf.dim(); ++i)
    if (!pa.lambda(0, i)[0].is_zero()) s.push_back(static_cast<Index>(i));
  return s;
}

}  // namespace

class Classification : public ::testing::TestWithParam<const char*> {};

TEST_P(Classification, DualGroupMatchesSubgroupOracle) {
  FiniteGroup g = FiniteGroup::by_name(GetParam());
  auto rows = classify_dual_on_point(g, Q);
  auto subgroups = oracle::subgroups(g);
  EXPECT_EQ(rows.size(), subgroups.size());
  std::set<std::vector<Index>> supports;
  for (const auto& r : rows) {
    ActionVerdict v = verify_partial_action(r.action);
    EXPECT_TRUE(v.ok()) << v.report.to_text();
    EXPECT_TRUE(v.report.passed("useful"));
    supports.insert(support(r.action));
    for (Index s : r.subgroup.elements) EXPECT_EQ(r.action.lambda(0, s)[0], q(1, r.subgroup.order()));
  }
  EXPECT_EQ(supports, subgroups);
  auto brute = oracle::constant_on_support_solutions(
      g, Q, [](std::size_t n) { return q(1, static_cast<long>(n)); }, oracle::dual_conditions);
  EXPECT_EQ(std::set<std::vector<Index>>(brute.begin(), brute.end()), subgroups);
}

TEST_P(Classification, GroupAlgebraMatchesSubgroupOracle) {
  FiniteGroup g = FiniteGroup::by_name(GetParam());
  auto rows = classify_group_algebra_on_point(g, Q);
  auto subgroups = oracle::subgroups(g);
  EXPECT_EQ(rows.size(), subgroups.size());
  std::set<std::vector<Index>> supports;
  for (const auto& r : rows) {
    ActionVerdict v = verify_partial_action(r.action);
    EXPECT_TRUE(v.ok()) << v.report.to_text();
    supports.insert(support(r.action));
  }
  EXPECT_EQ(supports, subgroups);
  auto brute = oracle::constant_on_support_solutions(
      g, Q, [](std::size_t) { return q(1); }, oracle::group_algebra_conditions);
  EXPECT_EQ(std::set<std::vector<Index>>(brute.begin(), brute.end()), subgroups);
}

INSTANTIATE_TEST_SUITE_P(Groups, Classification, ::testing::ValuesIn(kClassified));

TEST(Classification, ExpectedCounts) {
  const std::size_t expect[] = {2, 2, 3, 5, 6};
  for (std::size_t i = 0; i < 5; ++i) {
    FiniteGroup g = FiniteGroup::by_name(kClassified[i]);
    EXPECT_EQ(classify_dual_on_point(g, Q).size(), expect[i]);
    EXPECT_EQ(classify_group_algebra_on_point(g, Q).size(), expect[i]);
  }
}

TEST(Classification, DualGroupC2Table) {
  auto rows = classify_dual_on_point(FiniteGroup::cyclic(2), Q);
  std::set<std::pair<std::string, std::string>> table;
  for (const auto& r : rows) table.insert({r.action.lambda(0, 0)[0].to_string(), r.action.lambda(0, 1)[0].to_string()});
  EXPECT_EQ(table, (std::set<std::pair<std::string, std::string>>{{"1", "0"}, {"1/2", "1/2"}}));
}

TEST(Classification, CharacteristicDividingOrderRejected) {
  EXPECT_THROW(classify_dual_on_point(FiniteGroup::cyclic(3), Field::prime(3)), UnsupportedFieldError);
  EXPECT_EQ(classify_dual_on_point(FiniteGroup::cyclic(3), Field::prime(7)).size(), 2u);
}

TEST(PointAction, VerifierAgreesWithLambdaConditions) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> val(-2, 2);
  for (const char* name : {"C2", "C3", "S3"}) {
    FiniteGroup g = FiniteGroup::by_name(name);
    for (const HopfAlgebra& h : {build_dual_group_hopf(g, Q), build_group_algebra(g, Q)}) {
      for (int trial = 0; trial < 40; ++trial) {
        Vec l(h.dim(), Scalar::zero(Q));
        for (auto& s : l) s = q(val(rng), 2);
        HopfAction pa = action_on_point(h, l);
        bool residuals = true;
        for (const auto& [n, r] : lambda_residuals(h, l)) residuals = residuals && r.is_zero();
        EXPECT_EQ(verify_partial_action(pa).ok(), residuals);
        EXPECT_EQ(lambda_of(pa).conditions.ok(), residuals);
      }
    }
  }
}

TEST(PointAction, OracleConditionsAgreeWithVerifierOnDualGroup) {
  FiniteGroup g = FiniteGroup::by_name("C2xC2");
  HopfAlgebra h = build_dual_group_hopf(g, Q);
  for (std::uint32_t mask = 1; mask < 16; ++mask)
    for (long den : {1L, 2L, 4L}) {
      Vec l(4, Scalar::zero(Q));
      for (Index a = 0; a < 4; ++a)
        if (mask >> a & 1) l[a] = q(1, den);
      EXPECT_EQ(verify_partial_action(action_on_point(h, l)).ok(), oracle::dual_conditions(g, l));
    }
}

TEST(Sweedler, FamilyMembersPass) {
  HopfAlgebra h = build_sweedler(Q);
  for (Scalar a : {q(0), q(1), q(-3), q(7, 2)}) {
    ActionVerdict v = verify_partial_action(action_on_point(h, lambda_vec({q(1, 2), q(1, 2), q(0), a})));
    EXPECT_TRUE(v.ok()) << a.to_string() << "\n" << v.report.to_text();
    EXPECT_FALSE(v.global);
  }
  ActionVerdict eps = verify_partial_action(action_on_point(h, h.counit));
  EXPECT_TRUE(eps.ok());
  EXPECT_TRUE(eps.global);
}

TEST(Sweedler, CandidatesOutsideFamilyFail) {
  HopfAlgebra h = build_sweedler(Q);
  const std::vector<Vec> bad = {
      lambda_vec({q(1, 2), q(1, 2), q(1), q(0)}),   lambda_vec({q(1, 2), q(1, 2), q(-2), q(3)}),
      lambda_vec({q(1, 3), q(2, 3), q(0), q(0)}),   lambda_vec({q(2, 3), q(1, 3), q(0), q(1)}),
      lambda_vec({q(1), q(0), q(0), q(1)}),         lambda_vec({q(1), q(0), q(1), q(0)}),
      lambda_vec({q(1, 2), q(1, 2), q(1, 2), q(1)}), lambda_vec({q(0), q(1), q(0), q(0)})};
  for (const auto& l : bad) EXPECT_FALSE(verify_partial_action(action_on_point(h, l)).ok()) << to_string(l);
}

TEST(Sweedler, NonzeroH1WitnessNamesBasisPair) {
  HopfAlgebra h = build_sweedler(Q);
  ActionVerdict v = verify_partial_action(action_on_point(h, lambda_vec({q(1, 2), q(1, 2), q(1), q(0)})));
  EXPECT_FALSE(v.report.passed("H3-left"));
  EXPECT_NE(v.report.first_failure()->witness.find("h=h1 k=e1"), std::string::npos);
}

TEST(Sweedler, Exhaustiveness) {
  for (Field f : {Q, Field::prime(5), Field::prime(7)}) {
    SweedlerClassification c = classify_sweedler_on_point({Scalar(f, 0L), Scalar(f, 1L)}, f);
    EXPECT_TRUE(c.exhaustiveness.ok()) << f.to_string() << "\n" << c.exhaustiveness.to_text();
    EXPECT_EQ(c.actions.size(), 3u);
    for (const auto& a : c.actions) EXPECT_TRUE(verify_partial_action(a).ok());
  }
}

class UniformCycle : public ::testing::TestWithParam<int> {};

TEST_P(UniformCycle, PassesAndExtractsCyclicStabilizers) {
  const int n = GetParam();
  FiniteGroup g = FiniteGroup::cyclic(n);
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), g);
  ActionVerdict v = verify_partial_action(pa);
  EXPECT_TRUE(v.ok()) << v.report.to_text();
  EXPECT_FALSE(v.global);
  ExtractedSubgroups ex = extract_subgroup_data(pa, g);
  EXPECT_TRUE(ex.report.ok()) << ex.report.to_text();
  for (const auto& s : ex.data.stabilizer) EXPECT_EQ(s.order(), static_cast<std::size_t>(n));
  EXPECT_TRUE(verify_subgroup_data(pa.cat, g, ex.data).ok());
  HopfAction rebuilt = build_from_subgroup_data(pa.cat, g, ex.data);
  EXPECT_EQ(rebuilt.act, pa.act);
}

INSTANTIATE_TEST_SUITE_P(N, UniformCycle, ::testing::Values(2, 3, 5));

TEST(SubgroupData, ProperStabilizersOnThreeCycle) {
  FiniteGroup g = FiniteGroup::cyclic(2);
  LinSemicat c = three_cycle_category(Q);
  SubgroupData sd{{g.trivial_subgroup(), g.trivial_subgroup(), g.trivial_subgroup()},
                  std::vector<std::vector<std::optional<Index>>>(3, std::vector<std::optional<Index>>(3))};
  sd.t[1][0] = 1;
  sd.t[2][1] = 1;
  sd.t[0][2] = 0;
  Report r = verify_subgroup_data(c, g, sd);
  HopfAction pa = build_from_subgroup_data(c, g, sd);
  EXPECT_EQ(verify_partial_action(pa).ok(), r.ok());
}

TEST(Restriction, SwapOnProductReproducesEpsilonLambda) {
  HopfAction swap = swap_action(Q);
  EXPECT_TRUE(verify_global_action(swap).ok());
  HopfAction r = restrict_global(swap, {Vec{q(1), q(0)}});
  ActionVerdict v = verify_partial_action(r);
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(r.cat.dim(0, 0), 1u);
  EXPECT_EQ(r.lambda(0, 0), Vec{q(1)});
  EXPECT_EQ(r.lambda(0, 1), Vec{q(0)});
}

TEST(PartialGroupAction, RoundTripOnGroupAlgebraExamples) {
  std::vector<std::pair<FiniteGroup, HopfAction>> cases;
  for (const char* name : kClassified) {
    FiniteGroup g = FiniteGroup::by_name(name);
    for (auto& r : classify_group_algebra_on_point(g, Q)) cases.push_back({g, r.action});
    cases.push_back({g, trivial_action(three_cycle_category(Q), build_group_algebra(g, Q))});
  }
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  cases.push_back({c2, swap_action(Q)});
  cases.push_back({c2, restrict_global(swap_action(Q), {Vec{q(1), q(0)}})});
  for (const auto& [g, pa] : cases) {
    PartialGroupAction pga = to_partial_group_action(pa, g);
    Report r = verify_partial_group_action(pga);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(from_partial_group_action(pga).act, pa.act);
  }
}

TEST(PartialGroupAction, RejectsWrongHopfAlgebra) {
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(2));
  EXPECT_THROW(to_partial_group_action(pa, FiniteGroup::cyclic(2)), RejectedError);
}

TEST(TensorActions, CocommutativeExamplesPass) {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  HopfAction a = build_uniform_dual_action(three_cycle_category(Q), c2);
  HopfAction b = classify_dual_on_point(c2, Q)[1].action;
  HopfAction t1 = tensor_actions(a, b);
  EXPECT_TRUE(verify_partial_action(t1).ok());
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  auto rows = classify_group_algebra_on_point(s3, Q);
  HopfAction t2 = tensor_actions(rows[1].action, rows[2].action);
  EXPECT_TRUE(verify_partial_action(t2).ok());
  HopfAction t3 = tensor_actions(swap_action(Q), restrict_global(swap_action(Q), {Vec{q(1), q(0)}}));
  EXPECT_TRUE(verify_partial_action(t3).ok());
}

TEST(TensorActions, NonCocommutativeRejected) {
  HopfAlgebra h = build_sweedler(Q);
  HopfAction a = action_on_point(h, h.counit);
  EXPECT_THROW(tensor_actions(a, a), RejectedError);
}

TEST(LambdaData, InducedByK) {
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(3));
  LambdaData l = lambda_of(pa);
  EXPECT_TRUE(l.induced_by_k);
  EXPECT_TRUE(l.conditions.ok());
  EXPECT_TRUE(lambda_of(swap_action(Q)).induced_by_k);
}

TEST(PartialAction, CorruptedActionFailsAllRelevantAxioms) {
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(2));
  pa.act[1][0][1](0, 0) = q(1, 3);
  ActionVerdict v = verify_partial_action(pa);
  EXPECT_FALSE(v.report.passed("H1"));
  EXPECT_FALSE(v.ok());
}

TEST(PartialAction, SemicategoryRejected) {
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(2));
  pa.cat.clear_identities();
  EXPECT_THROW(verify_partial_action(pa), RejectedError);
}

TEST(PartialAction, UsefulIdentityOnEveryPassingAction) {
  std::vector<HopfAction> passing;
  for (const char* name : kClassified) {
    FiniteGroup g = FiniteGroup::by_name(name);
    for (auto& r : classify_dual_on_point(g, Q)) passing.push_back(r.action);
    for (auto& r : classify_group_algebra_on_point(g, Q)) passing.push_back(r.action);
  }
  for (int n : {2, 3, 5}) passing.push_back(build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(n)));
  for (auto& a : classify_sweedler_on_point({q(0), q(1), q(-3), q(7, 2)}, Q).actions) passing.push_back(a);
  for (const auto& pa : passing) {
    ActionVerdict v = verify_partial_action(pa);
    ASSERT_TRUE(v.ok());
    EXPECT_TRUE(v.report.passed("useful"));
  }
}
