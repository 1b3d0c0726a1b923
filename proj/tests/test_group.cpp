#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace parthopf;

namespace {

const char* const kGroups[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"};

void expect_group_axioms(const FiniteGroup& g) {
  const Index e = g.identity();
  for (Index a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.mul(e, a), a);
    EXPECT_EQ(g.mul(a, e), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), e);
    for (Index b = 0; b < g.order(); ++b)
      for (Index c = 0; c < g.order(); ++c) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

}  // namespace

class GroupByName : public ::testing::TestWithParam<const char*> {};

TEST_P(GroupByName, AxiomsHold) { expect_group_axioms(FiniteGroup::by_name(GetParam())); }

TEST_P(GroupByName, SubgroupsMatchBruteForce) {
  FiniteGroup g = FiniteGroup::by_name(GetParam());
  std::set<std::vector<Index>> found;
  for (const auto& s : g.enumerate_subgroups()) {
    auto elems = s.elements;
    std::sort(elems.begin(), elems.end());
    found.insert(elems);
  }
  EXPECT_EQ(found, oracle::subgroups(g));
}

TEST_P(GroupByName, CosetsPartitionAndActTransitively) {
  FiniteGroup g = FiniteGroup::by_name(GetParam());
  for (const auto& h : g.enumerate_subgroups()) {
    auto cosets = g.left_cosets(h);
    EXPECT_EQ(cosets.size() * h.order(), g.order());
    auto act = g.coset_action(h);
    std::set<std::size_t> orbit;
    for (Index a = 0; a < g.order(); ++a) orbit.insert(act[a][0]);
    EXPECT_EQ(orbit.size(), cosets.size());
    for (Index t = 0; t < g.order(); ++t)
      for (Index s = 0; s < g.order(); ++s)
        EXPECT_EQ(g.same_left_coset(t, s, h), h.contains(g.mul(g.inv(t), s)));
  }
}

INSTANTIATE_TEST_SUITE_P(Builders, GroupByName, ::testing::ValuesIn(kGroups));

TEST(FiniteGroup, SubgroupCounts) {
  EXPECT_EQ(FiniteGroup::by_name("C2").enumerate_subgroups().size(), 2u);
  EXPECT_EQ(FiniteGroup::by_name("C3").enumerate_subgroups().size(), 2u);
  EXPECT_EQ(FiniteGroup::by_name("C4").enumerate_subgroups().size(), 3u);
  EXPECT_EQ(FiniteGroup::by_name("C2xC2").enumerate_subgroups().size(), 5u);
  EXPECT_EQ(FiniteGroup::by_name("S3").enumerate_subgroups().size(), 6u);
}

TEST(FiniteGroup, ConjugateOfNonNormalSubgroup) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  std::size_t non_normal = 0;
  for (const auto& h : s3.enumerate_subgroups()) {
    if (h.order() != 2) continue;
    for (Index t = 0; t < s3.order(); ++t)
      if (!(s3.conjugate(h, t) == h)) {
        ++non_normal;
        break;
      }
  }
  EXPECT_EQ(non_normal, 3u);
}

TEST(FiniteGroup, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), StructuralError);
  EXPECT_THROW(FiniteGroup::from_table({}), StructuralError);
  EXPECT_THROW(FiniteGroup::by_name("Q8"), StructuralError);
  EXPECT_THROW(FiniteGroup::by_name("C2").subgroup({1}), RejectedError);
}

TEST(FiniteGroup, DirectProductOrder) {
  FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.is_abelian());
  expect_group_axioms(g);
}
