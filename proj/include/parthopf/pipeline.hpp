#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "parthopf/smash/smash.hpp"

namespace parthopf {

using Facts = std::vector<std::pair<std::string, std::string>>;

struct Stage {
  std::string name;
  Report report;
  Facts facts;
};

/// Stage-by-stage certificate from the action through D, stopping at the
/// first failing stage.
struct Certificate {
  std::vector<Stage> stages;

  bool ok() const {
    for (const auto& s : stages)
      if (!s.report.ok()) return false;
    return true;
  }
  const Stage* halted() const {
    for (const auto& s : stages)
      if (!s.report.ok()) return &s;
    return nullptr;
  }
};

inline std::string hom_dims_string(const LinSemicat& c) {
  std::string out = "[";
  for (std::size_t y = 0; y < c.size(); ++y) {
    out += y ? ",[" : "[";
    for (std::size_t x = 0; x < c.size(); ++x) out += (x ? "," : "") + std::to_string(c.dim(y, x));
    out += "]";
  }
  return out + "]";
}

inline Certificate run_pipeline(const HopfAction& pa) {
  Certificate cert;
  auto stage = [&cert](const std::string& name, const std::function<void(Stage&)>& body) {
    Stage s{name, Report(name), {}};
    try {
      body(s);
    } catch (const RejectedError& e) {
      s.report.fail("construction", e.what());
    } catch (const StructuralError& e) {
      s.report.fail("construction", e.what());
    }
    cert.stages.push_back(std::move(s));
    return cert.stages.back().report.ok();
  };
  if (!stage("action", [&](Stage& s) {
        ActionVerdict v = verify_partial_action(pa);
        s.report.merge("", v.report);
        s.facts.push_back({"global", v.global ? "true" : "false"});
        s.facts.push_back({"hom-dims", hom_dims_string(pa.cat)});
      }))
    return cert;
  std::optional<Globalization> g;
  if (!stage("globalization", [&](Stage& s) {
        g = standard_globalization(pa);
        s.report.merge("", verify_globalization(*g, pa));
        s.report.merge("", verify_minimality(*g, pa));
        s.facts.push_back({"B-dims", hom_dims_string(g->B())});
      }))
    return cert;
  if (!stage("smash", [&](Stage& s) {
        PartialSmash ps = partial_smash(pa);
        s.report.merge("tensor", verify_semicat(ps.tensor));
        s.report.merge("tensor", smash_left_unit(pa, ps.tensor));
        s.report.merge("smash", verify_partial_smash(pa, ps));
        s.report.merge("hstar", verify_global_action(hstar_action(pa, ps)));
        MatrixSmashIso iso = matrix_smash_iso(pa);
        s.report.merge("matrix-iso", verify_matrix_smash_iso(iso));
        s.facts.push_back({"tensor-dims", hom_dims_string(ps.tensor)});
        s.facts.push_back({"smash-dims", hom_dims_string(ps.smash)});
        s.facts.push_back({"matrix-algebra-dim", std::to_string(iso.target.algebra.dim())});
      }))
    return cert;
  if (!stage("morita", [&](Stage& s) {
        for (std::size_t x = 0; x < pa.cat.size(); ++x) {
          SmashMorita m = smash_morita_context(pa, *g, x);
          s.report.merge(pa.cat.object(x), m.report);
          s.facts.push_back({pa.cat.object(x), "A=" + std::to_string(m.context.A.dim()) +
                                                   " R=" + std::to_string(m.context.B.dim()) +
                                                   " M=" + std::to_string(m.m.dim()) + " N=" +
                                                   std::to_string(m.n.dim()) +
                                                   " tau-injective=" + (m.status.tau_injective ? "yes" : "no") +
                                                   " sigma-injective=" + (m.status.sigma_injective ? "yes" : "no")});
        }
      }))
    return cert;
  stage("D", [&](Stage& s) {
    DCategory d = build_D_category(pa, *g);
    s.report.merge("", d.report);
    s.facts.push_back({"D-dims", hom_dims_string(d.D)});
  });
  return cert;
}

}  // namespace parthopf
