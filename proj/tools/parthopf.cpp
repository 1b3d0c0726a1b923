#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parthopf/io/workspace.hpp"
#include "parthopf/parthopf.hpp"

using namespace parthopf;
using ojson = nlohmann::ordered_json;

namespace {

struct Section {
  std::string title;
  Facts facts;
  Report report;
  ojson structures;  // only in records output
};

struct Output {
  std::string command;
  std::vector<Section> sections;
  std::string halt;

  bool ok() const {
    if (!halt.empty()) return false;
    for (const auto& s : sections)
      if (!s.report.ok()) return false;
    return true;
  }

  std::string text() const {
    std::ostringstream os;
    for (const auto& s : sections) {
      os << "# " << s.title << "\n";
      for (const auto& [k, v] : s.facts) os << k << ": " << v << "\n";
      for (const auto& c : s.report.checks()) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed && !c.witness.empty()) os << ": " << c.witness;
        os << "\n";
      }
    }
    if (!halt.empty()) os << "HALT " << halt << "\n";
    os << (ok() ? "RESULT pass" : "RESULT fail") << "\n";
    return os.str();
  }

  std::string records() const {
    ojson doc{{"command", command}, {"result", ok() ? "pass" : "fail"}};
    ojson secs = ojson::array();
    for (const auto& s : sections) {
      ojson facts = ojson::object();
      for (const auto& [k, v] : s.facts) facts[k] = v;
      ojson checks = ojson::array();
      for (const auto& c : s.report.checks()) checks.push_back({{"name", c.name}, {"pass", c.passed}, {"witness", c.witness}});
      ojson sec{{"title", s.title}, {"facts", facts}, {"checks", checks}};
      if (!s.structures.is_null()) sec["structures"] = s.structures;
      secs.push_back(sec);
    }
    doc["sections"] = secs;
    if (!halt.empty()) doc["halt"] = halt;
    return doc.dump(2) + "\n";
  }
};

std::string vec_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

Workspace load(const std::string& path, std::optional<Field> field) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return load_workspace(doc, field);
}

Facts lambda_facts(const HopfAction& pa) {
  Facts f;
  for (std::size_t x = 0; x < pa.cat.size(); ++x)
    for (std::size_t i = 0; i < pa.hopf.dim(); ++i)
      f.push_back({"lambda[" + pa.cat.object(x) + "][" + pa.hopf.basis[i] + "]", vec_string(pa.lambda(x, i))});
  return f;
}

Section action_section(const std::string& title, const HopfAction& pa) {
  ActionVerdict v = verify_partial_action(pa);
  Section s{title, {{"global", v.global ? "true" : "false"}}, v.report, {}};
  for (auto& f : lambda_facts(pa)) s.facts.push_back(f);
  return s;
}

void cmd_verify_hopf(Output& out, const Workspace& ws, const std::string& name) {
  const HopfAlgebra& h = ws.hopf_algebra(name);
  Section s{"hopf " + name, {{"dim", std::to_string(h.dim())},
                             {"cocommutative", is_cocommutative(h) ? "true" : "false"}},
            verify_hopf(h), io::hopf_json(h)};
  out.sections.push_back(std::move(s));
}

void cmd_verify_cat(Output& out, const Workspace& ws, const std::string& name) {
  const LinSemicat& c = ws.category(name);
  out.sections.push_back({"category " + name, {{"hom-dims", hom_dims_string(c)},
                                              {"identities", c.is_category() ? "true" : "false"}},
                          verify_semicat(c), io::category_json(c)});
}

void cmd_verify_action(Output& out, const Workspace& ws, const std::string& name) {
  const HopfAction& pa = ws.action(name);
  Section s = action_section("action " + name, pa);
  LambdaData ld = lambda_of(pa);
  s.facts.push_back({"induced-by-k", ld.induced_by_k ? "true" : "false"});
  s.report.merge("", ld.conditions);
  out.sections.push_back(std::move(s));
}

void cmd_classify(Output& out, const std::string& kind, const std::string& group,
                  const std::vector<std::string>& alphas, Field field) {
  if (kind == "sweedler") {
    std::vector<Scalar> as;
    for (const auto& a : alphas) as.push_back(io::scalar(field, json(a)));
    SweedlerClassification c = classify_sweedler_on_point(as, field);
    out.sections.push_back({"sweedler on k", {{"rows", std::to_string(c.actions.size())}}, c.exhaustiveness, {}});
    for (std::size_t i = 0; i < c.actions.size(); ++i)
      out.sections.push_back(action_section(c.labels[i], c.actions[i]));
    return;
  }
  if (group.empty()) throw FormatError("classify " + kind + " needs --group");
  FiniteGroup g = FiniteGroup::by_name(group);
  std::vector<PointAction> rows;
  if (kind == "dual-group") rows = classify_dual_on_point(g, field);
  else if (kind == "group-algebra") rows = classify_group_algebra_on_point(g, field);
  else throw FormatError("unknown classification kind '" + kind + "'");
  const std::size_t subgroups = g.enumerate_subgroups().size();
  Report count("count");
  count.record("one-action-per-subgroup", rows.size() == subgroups,
               std::to_string(rows.size()) + " actions for " + std::to_string(subgroups) + " subgroups");
  out.sections.push_back({kind + " " + group + " on k",
                          {{"rows", std::to_string(rows.size())}, {"subgroups", std::to_string(subgroups)}}, count, {}});
  for (const auto& r : rows) {
    std::string members;
    for (Index e : r.subgroup.elements) members += (members.empty() ? "" : ",") + g.name(e);
    out.sections.push_back(action_section("subgroup {" + members + "}", r.action));
  }
}

void cmd_globalize(Output& out, const Workspace& ws, const std::string& name) {
  const HopfAction& pa = ws.action(name);
  Globalization g = standard_globalization(pa);
  Report r = verify_globalization(g, pa);
  r.merge("", verify_minimality(g, pa));
  ojson F = ojson::object();
  for (std::size_t y = 0; y < pa.cat.size(); ++y)
    for (std::size_t x = 0; x < pa.cat.size(); ++x)
      if (pa.cat.dim(y, x)) F[pa.cat.object(y) + "|" + pa.cat.object(x)] = io::matrix_json(g.F[y][x]);
  out.sections.push_back({"globalization of " + name, {{"B-dims", hom_dims_string(g.B())}}, r,
                          {{"B", io::category_json(g.B())}, {"action", io::action_json(g.global)}, {"F", F}}});
}

void cmd_smash(Output& out, const Workspace& ws, const std::string& name) {
  const HopfAction& pa = ws.action(name);
  PartialSmash ps = partial_smash(pa);
  Report r("smash");
  r.merge("tensor", verify_semicat(ps.tensor));
  r.merge("tensor", smash_left_unit(pa, ps.tensor));
  r.merge("smash", verify_partial_smash(pa, ps));
  r.merge("hstar", verify_global_action(hstar_action(pa, ps)));
  MatrixSmashIso iso = matrix_smash_iso(pa);
  r.merge("matrix-iso", verify_matrix_smash_iso(iso));
  out.sections.push_back({"smash of " + name,
                          {{"tensor-dims", hom_dims_string(ps.tensor)},
                           {"smash-dims", hom_dims_string(ps.smash)},
                           {"matrix-algebra-dim", std::to_string(iso.target.algebra.dim())}},
                          r,
                          {{"tensor", io::category_json(ps.tensor)},
                           {"smash", io::category_json(ps.smash)},
                           {"matrix-algebra", io::tensor_json(iso.target.algebra.mult)}}});
}

void cmd_morita(Output& out, const Workspace& ws, const std::string& name) {
  const HopfAction& pa = ws.action(name);
  Globalization g = standard_globalization(pa);
  for (std::size_t x = 0; x < pa.cat.size(); ++x) {
    SmashMorita m = smash_morita_context(pa, g, x);
    Section s{"morita at " + pa.cat.object(x),
              {{"A-dim", std::to_string(m.context.A.dim())},
               {"R-dim", std::to_string(m.context.B.dim())},
               {"M-dim", std::to_string(m.m.dim())},
               {"N-dim", std::to_string(m.n.dim())},
               {"tau-surjective", m.status.tau_surjective ? "yes" : "no"},
               {"sigma-surjective", m.status.sigma_surjective ? "yes" : "no"},
               {"tau-injective", m.status.tau_injective ? "yes" : "no"},
               {"sigma-injective", m.status.sigma_injective ? "yes" : "no"}},
              m.report,
              {}};
    out.sections.push_back(std::move(s));
  }
  DCategory d = build_D_category(pa, g);
  ojson G = ojson::object();
  for (std::size_t y = 0; y < pa.cat.size(); ++y)
    for (std::size_t x = 0; x < pa.cat.size(); ++x)
      if (pa.cat.dim(y, x)) G[pa.cat.object(y) + "|" + pa.cat.object(x)] = io::matrix_json(d.G.at(y, x));
  Section s{"D category", {{"D-dims", hom_dims_string(d.D)}}, d.report, {{"G", G}}};
  for (std::size_t y = 0; y < pa.cat.size(); ++y)
    for (std::size_t x = 0; x < pa.cat.size(); ++x)
      for (std::size_t c = 0; c < d.G.at(y, x).cols(); ++c)
        s.facts.push_back({"G(" + pa.cat.object(y) + "|" + pa.cat.object(x) + ":" + std::to_string(c) + ")",
                           vec_string(d.G.at(y, x).column(c))});
  out.sections.push_back(std::move(s));
}

void pipeline_into(Output& out, const std::string& name, const HopfAction& pa) {
  Certificate cert = run_pipeline(pa);
  for (const auto& st : cert.stages) out.sections.push_back({st.name + " (" + name + ")", st.facts, st.report, {}});
  if (const Stage* h = cert.halted()) out.halt = h->name + ": " + h->report.first_failure()->name + ": " +
                                                  h->report.first_failure()->witness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Hopf actions on linear categories"};
  app.require_subcommand(1);
  std::string field_text, out_path, format = "text";
  app.add_option("--field", field_text, "q or gf:<p>");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  std::string file, name, kind, group;
  std::vector<std::string> alphas;
  std::map<std::string, CLI::App*> subs;
  const std::pair<const char*, const char*> named[] = {
      {"verify-hopf", "check the Hopf algebra axioms"},
      {"verify-cat", "check a linear (semi)category"},
      {"verify-action", "check a partial action"},
      {"globalize", "build and check the standard globalization"},
      {"smash", "build the partial smash product and its matrix algebra"},
      {"morita", "Morita context at every object"},
      {"pipeline", "globalization through D, halting at the first failure"}};
  for (const auto& [c, help] : named) {
    auto* s = app.add_subcommand(c, help);
    s->add_option("file", file, "workspace JSON")->required();
    s->add_option("name", name, "object name")->required();
    subs[c] = s;
  }
  auto* classify = app.add_subcommand("classify", "classify actions on k");
  classify->add_option("kind", kind, "dual-group, group-algebra or sweedler")->required();
  classify->add_option("--group", group, "C<n>, S<n> or C2xC2");
  classify->add_option("--alpha", alphas, "alpha values for the sweedler family");
  subs["classify"] = classify;
  subs["demo"] = app.add_subcommand("demo", "run the pipeline on the three-object example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  for (const auto& [n, s] : subs)
    if (s->parsed()) out.command = n;
  try {
    std::optional<Field> field;
    if (!field_text.empty()) field = Field::parse(field_text);
    const std::string& cmd = out.command;
    if (cmd == "classify") {
      cmd_classify(out, kind, group, alphas, field.value_or(Field::rationals()));
    } else if (cmd == "demo") {
      const Field f = field.value_or(Field::rationals());
      pipeline_into(out, "three-cycle C2", build_uniform_dual_action(three_cycle_category(f), FiniteGroup::cyclic(2)));
    } else {
      Workspace ws = load(file, field);
      if (!ws.has(name)) throw FormatError("unknown name '" + name + "'");
      if (cmd == "verify-hopf") cmd_verify_hopf(out, ws, name);
      else if (cmd == "verify-cat") cmd_verify_cat(out, ws, name);
      else if (cmd == "verify-action") cmd_verify_action(out, ws, name);
      else if (cmd == "globalize") cmd_globalize(out, ws, name);
      else if (cmd == "smash") cmd_smash(out, ws, name);
      else if (cmd == "morita") cmd_morita(out, ws, name);
      else pipeline_into(out, name, ws.action(name));
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RejectedError& e) {
    out.halt = e.what();
  }

  const std::string text = format == "records" ? out.records() : out.text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << text;
  }
  return out.ok() ? 0 : 1;
}
