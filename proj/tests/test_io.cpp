#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "parthopf/io/workspace.hpp"
#include "parthopf/parthopf.hpp"

using namespace parthopf;
using json = nlohmann::json;

namespace {

const Field Q = Field::rationals();

json read(const std::string& file) {
  std::ifstream in(std::string(PARTHOPF_DATA_DIR) + "/" + file);
  return json::parse(in);
}

json workspace_of(const HopfAction& pa) {
  return {{"field", "q"},
          {"hopf", {{"H", io::hopf_json(pa.hopf)}}},
          {"categories", {{"C", io::category_json(pa.cat)}}},
          {"actions", {{"a", {{"hopf", "H"}, {"category", "C"}, {"act", io::action_json(pa)}}}}}};
}

}  // namespace

TEST(Workspace, EveryDataFileLoads) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PARTHOPF_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    EXPECT_NO_THROW(load_workspace(read(entry.path().filename().string()))) << entry.path();
  }
  EXPECT_GE(files, 8u);
}

TEST(Workspace, CatalogKindsMatchBuilders) {
  Workspace ws = load_workspace(read("hopf.json"));
  EXPECT_TRUE(same_structure(ws.hopf_algebra("H4"), build_sweedler(Q)));
  EXPECT_TRUE(same_structure(ws.hopf_algebra("kS3*"), build_dual_group_hopf(FiniteGroup::symmetric(3), Q)));
  EXPECT_TRUE(same_structure(ws.hopf_algebra("kC2"), build_group_algebra(FiniteGroup::cyclic(2), Q)));
  EXPECT_TRUE(verify_hopf(ws.hopf_algebra("H4*")).ok());
}

TEST(Workspace, ExplicitThreeCycleMatchesBuilder) {
  Workspace ws = load_workspace(read("three_cycle.json"));
  const LinSemicat& c = ws.category("cycle");
  LinSemicat b = three_cycle_category(Q);
  for (std::size_t z = 0; z < 3; ++z)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(c.comp(z, y, x), b.comp(z, y, x));
  EXPECT_EQ(ws.action("uniform2").act,
            build_uniform_dual_action(b, FiniteGroup::cyclic(2)).act);
}

TEST(Workspace, FieldOverride) {
  Workspace ws = load_workspace(read("sweedler.json"), Field::prime(7));
  EXPECT_EQ(ws.field, Field::prime(7));
  EXPECT_EQ(ws.action("alpha7/2").lambda(0, 3)[0], Scalar(Field::prime(7), 7L, 2L));
}

TEST(Workspace, RoundTripsThroughJson) {
  std::vector<HopfAction> cases = {build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(3)),
                                   swap_action(Q),
                                   classify_sweedler_on_point({Scalar(Q, 1L)}, Q).actions.back()};
  for (const auto& pa : cases) {
    json doc = workspace_of(pa);
    Workspace ws = load_workspace(json::parse(doc.dump()));
    const HopfAction& back = ws.action("a");
    EXPECT_TRUE(same_structure(back.hopf, pa.hopf));
    EXPECT_EQ(back.act, pa.act);
    EXPECT_EQ(io::category_json(back.cat), io::category_json(pa.cat));
    EXPECT_EQ(workspace_of(back).dump(), doc.dump());
  }
}

TEST(Workspace, ActionsResolveOutOfOrder) {
  json doc = read("swap.json");
  doc["actions"]["aaa"] = {{"kind", "restrict"}, {"global", "swap"}, {"idempotent", {{"*", {0, 1}}}}};
  Workspace ws = load_workspace(doc);
  EXPECT_TRUE(ws.has("aaa"));
  EXPECT_EQ(ws.action("restricted").lambda(0, 1), Vec{Scalar::zero(Q)});
}

TEST(Workspace, FormatErrors) {
  EXPECT_THROW(load_workspace(json::array()), FormatError);
  EXPECT_THROW(load_workspace(json{{"field", "gf:8"}}), FormatError);
  EXPECT_THROW(load_workspace(json{{"groups", {{"G", "Q8"}}}}), FormatError);
  EXPECT_THROW(load_workspace(json{{"groups", {{"G", "C2"}}}, {"hopf", {{"G", {{"kind", "sweedler"}}}}}}), FormatError);
  EXPECT_THROW(load_workspace(json{{"actions", {{"a", {{"kind", "restrict"}, {"global", "b"}}}}}}), FormatError);
  EXPECT_THROW(load_workspace(json{{"hopf", {{"H", {{"kind", "warp"}}}}}}), FormatError);
  json bad = read("three_cycle.json");
  bad["categories"]["cycle"]["comp"]["2|2|1"] = json::array({json::array({0, 0, 5, 1})});
  EXPECT_THROW(load_workspace(bad), FormatError);
  Workspace ws = load_workspace(read("swap.json"));
  EXPECT_THROW(ws.action("nothing"), FormatError);
}
