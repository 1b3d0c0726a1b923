#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "examples.hpp"
#include "oracles.hpp"

using namespace parthopf;

namespace {

const Field Q = Field::rationals();

/// Collects the first reason a criterion fails.
struct Outcome {
  std::string failure;

  void require(bool cond, const std::string& what) {
    if (!cond && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

std::vector<std::pair<std::string, HopfAlgebra>> hopf_catalog() {
  std::vector<std::pair<std::string, HopfAlgebra>> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back({"kC" + std::to_string(n), build_group_algebra(FiniteGroup::cyclic(n), Q)});
    out.push_back({"k^C" + std::to_string(n), build_dual_group_hopf(FiniteGroup::cyclic(n), Q)});
  }
  out.push_back({"kS3", build_group_algebra(FiniteGroup::symmetric(3), Q)});
  out.push_back({"k^S3", build_dual_group_hopf(FiniteGroup::symmetric(3), Q)});
  out.push_back({"H4", build_sweedler(Q)});
  return out;
}

Outcome hopf_verifier() {
  Outcome o;
  std::mt19937 rng(1);
  for (const auto& [name, h] : hopf_catalog()) {
    o.require(verify_hopf(h).ok(), name + " fails an axiom");
    for (int t = 0; t < 20; ++t) o.require(!verify_hopf(oracle::mutate(h, rng)).ok(), name + " mutation undetected");
  }
  return o;
}

Outcome classification_counts() {
  Outcome o;
  const std::pair<const char*, std::size_t> expect[] = {{"C2", 2}, {"C3", 2}, {"C4", 3}, {"C2xC2", 5}, {"S3", 6}};
  for (const auto& [name, count] : expect) {
    FiniteGroup g = FiniteGroup::by_name(name);
    auto subgroups = oracle::subgroups(g);
    o.require(subgroups.size() == count, std::string(name) + " oracle subgroup count");
    auto dual = classify_dual_on_point(g, Q);
    auto kg = classify_group_algebra_on_point(g, Q);
    o.require(dual.size() == count && kg.size() == count, std::string(name) + " count");
    for (const auto& r : dual) o.require(verify_partial_action(r.action).ok(), std::string(name) + " dual row fails");
    for (const auto& r : kg) o.require(verify_partial_action(r.action).ok(), std::string(name) + " kG row fails");
    auto bd = oracle::constant_on_support_solutions(
        g, Q, [](std::size_t n) { return Scalar(Q, 1L, static_cast<long>(n)); }, oracle::dual_conditions);
    auto bg = oracle::constant_on_support_solutions(g, Q, [](std::size_t) { return Scalar::one(Q); },
                                                    oracle::group_algebra_conditions);
    o.require(std::set<std::vector<Index>>(bd.begin(), bd.end()) == subgroups, std::string(name) + " extra dual solution");
    o.require(std::set<std::vector<Index>>(bg.begin(), bg.end()) == subgroups, std::string(name) + " extra kG solution");
  }
  return o;
}

Outcome sweedler_family() {
  Outcome o;
  HopfAlgebra h = build_sweedler(Q);
  auto q = [](long n, long d = 1) { return Scalar(Q, n, d); };
  for (Scalar a : {q(0), q(1), q(-3), q(7, 2)})
    o.require(verify_partial_action(action_on_point(h, Vec{q(1, 2), q(1, 2), q(0), a})).ok(), "alpha " + a.to_string());
  o.require(verify_partial_action(action_on_point(h, h.counit)).ok(), "epsilon");
  for (const Vec& bad : {Vec{q(1, 2), q(1, 2), q(1), q(0)}, Vec{q(1, 2), q(1, 2), q(-2), q(5)},
                         Vec{q(1, 3), q(2, 3), q(0), q(0)}, Vec{q(1), q(0), q(0), q(1)},
                         Vec{q(1), q(0), q(1), q(0)}, Vec{q(0), q(1), q(0), q(0)}})
    o.require(!verify_partial_action(action_on_point(h, bad)).ok(), "candidate " + to_string(bad) + " passes");
  SweedlerClassification c = classify_sweedler_on_point({q(0), q(1), q(-3), q(7, 2)}, Q);
  o.require(c.exhaustiveness.ok(), "case analysis not exhaustive");
  return o;
}

Outcome uniform_cycle() {
  Outcome o;
  for (std::size_t n : {2u, 3u, 5u}) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), g);
    ActionVerdict v = verify_partial_action(pa);
    o.require(v.ok(), "n=" + std::to_string(n) + " fails");
    o.require(!v.global, "n=" + std::to_string(n) + " reported global");
    ExtractedSubgroups ex = extract_subgroup_data(pa, g);
    o.require(ex.report.ok(), "extraction fails");
    for (const auto& s : ex.data.stabilizer) o.require(s.order() == n, "stabilizer is not C_n");
  }
  return o;
}

Outcome globalization() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    for (const auto& r : classify_dual_on_point(g, Q)) {
      if (r.subgroup.order() != n && r.subgroup.order() != 1) continue;
      Globalization s = standard_globalization(r.action);
      o.require(s.B().dim(0, 0) == r.subgroup.order(), "dim B at n=" + std::to_string(n));
      if (r.subgroup.order() == n) {
        DualPointGlobalization model = dual_point_globalization(g, r.subgroup, Q);
        o.require(globalization_iso(r.action, s, model.glob).report.ok(), "no iso at n=" + std::to_string(n));
      }
    }
  }
  for (const auto& [name, pa] : examples::classified_actions()) {
    Globalization g = standard_globalization(pa);
    o.require(verify_globalization(g, pa).ok() && verify_minimality(g, pa).ok(), name + " fails (a)-(e)");
  }
  return o;
}

Outcome smash() {
  Outcome o;
  HopfAction pa = build_uniform_dual_action(three_cycle_category(Q), FiniteGroup::cyclic(2));
  PartialSmash s = partial_smash(pa);
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x)
      if (pa.cat.dim(y, x)) o.require(s.smash.dim(y, x) == 1, "hom space dimension");
  MatrixSmashIso iso = matrix_smash_iso(pa);
  o.require(iso.target.algebra.dim() == 6, "a(A#H) dimension");
  o.require(verify_matrix_smash_iso(iso).ok(), "matrix iso");
  o.require(verify_global_action(hstar_action(pa, s)).ok(), "H* action");
  return o;
}

Outcome morita() {
  Outcome o;
  for (const auto& [name, pa] : examples::classified_actions()) {
    Globalization g = standard_globalization(pa);
    for (std::size_t x = 0; x < pa.cat.size(); ++x) {
      SmashMorita m = smash_morita_context(pa, g, x);
      o.require(m.ok(), name + " context at " + pa.cat.object(x));
    }
    o.require(build_D_category(pa, g).ok(), name + " D");
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3"}) {
    FiniteGroup g = FiniteGroup::by_name(name);
    std::vector<HopfAction> cases;
    for (const auto& r : classify_group_algebra_on_point(g, Q)) cases.push_back(r.action);
    cases.push_back(trivial_action(three_cycle_category(Q), build_group_algebra(g, Q)));
    for (const auto& pa : cases) {
      PartialGroupAction pga = to_partial_group_action(pa, g);
      o.require(verify_partial_group_action(pga).ok(), std::string(name) + " partial group action");
      o.require(from_partial_group_action(pga).act == pa.act, std::string(name) + " round trip");
    }
  }
  HopfAction r = restrict_global(swap_action(Q), {Vec{Scalar::one(Q), Scalar::zero(Q)}});
  o.require(r.lambda(0, 0) == Vec{Scalar::one(Q)} && r.lambda(0, 1) == Vec{Scalar::zero(Q)}, "restricted swap");
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  HopfAction t1 = tensor_actions(build_uniform_dual_action(three_cycle_category(Q), c2),
                                 classify_dual_on_point(c2, Q)[1].action);
  auto s3 = classify_group_algebra_on_point(FiniteGroup::symmetric(3), Q);
  HopfAction t2 = tensor_actions(s3[1].action, s3[2].action);
  o.require(verify_partial_action(t1).ok() && verify_partial_action(t2).ok(), "tensor");
  return o;
}

Outcome useful_identity() {
  Outcome o;
  for (const auto& [name, pa] : examples::classified_actions()) {
    ActionVerdict v = verify_partial_action(pa);
    o.require(v.ok() && v.report.passed("useful"), name);
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Hopf verifier", hopf_verifier},           {"classification counts", classification_counts},
      {"Sweedler family", sweedler_family},       {"uniform action on three objects", uniform_cycle},
      {"globalization", globalization},           {"smash", smash},
      {"Morita", morita},                         {"round trips", round_trips},
      {"useful identity", useful_identity}};
  int failed = 0;
  int n = 0;
  for (const auto& [title, run] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << ms << " ms)";
    if (!o.ok()) line << ": " << o.failure;
    std::cout << line.str() << "\n";
    if (!o.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
