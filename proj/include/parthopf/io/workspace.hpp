#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parthopf/action/sweedler.hpp"
#include "parthopf/catalog.hpp"

namespace parthopf {

using json = nlohmann::json;

/// Named objects loaded from one JSON document, all over one field.
///
/// Document layout (every section optional):
///   "field":      "q" | "gf:<p>"
///   "groups":     name -> "C3" | {"table": [[...]], "names": [...]}
///   "hopf":       name -> {"kind": "group-algebra"|"dual-group", "group": g}
///                       | {"kind": "sweedler"} | {"kind": "dual", "of": h}
///                       | explicit {"basis", "mult", "unit", "comult", "counit", "antipode"}
///   "categories": name -> {"kind": "three-cycle"|"point"|"product-point"|"two-point"}
///                       | explicit {"objects", "homs", "comp", "identities"}
///   "actions":    name -> {"hopf": h, "category": c, ...} with "kind" one of
///                 uniform-dual, point, trivial, swap, subgroup-data, restrict,
///                 tensor, or explicit "act".
/// Structure constants are sparse lists [i, j, k, "c"]; hom pairs are keyed
/// "y|x" and composition triples "z|y|x" by object name.
struct Workspace {
  Field field = Field::rationals();
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, HopfAlgebra> hopf;
  std::map<std::string, LinSemicat> categories;
  std::map<std::string, HopfAction> actions;

  bool has(const std::string& name) const {
    return groups.count(name) || hopf.count(name) || categories.count(name) || actions.count(name);
  }

  template <typename T>
  static const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) throw FormatError(std::string("no ") + kind + " named '" + name + "'");
    return it->second;
  }
  const FiniteGroup& group(const std::string& n) const { return lookup(groups, n, "group"); }
  const HopfAlgebra& hopf_algebra(const std::string& n) const { return lookup(hopf, n, "Hopf algebra"); }
  const LinSemicat& category(const std::string& n) const { return lookup(categories, n, "category"); }
  const HopfAction& action(const std::string& n) const { return lookup(actions, n, "action"); }
};

namespace io {

inline Scalar scalar(Field f, const json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const StructuralError& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("expected a scalar, got " + j.dump());
}

inline json scalar_json(const Scalar& s) { return s.to_string(); }

inline Vec vec(Field f, const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw FormatError(what + " needs " + std::to_string(n) + " entries");
  Vec v;
  for (const auto& e : j) v.push_back(scalar(f, e));
  return v;
}

inline json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

inline std::size_t index(const json& j, std::size_t bound, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw FormatError(what + ": expected an index, got " + j.dump());
  const auto i = j.get<std::size_t>();
  if (i >= bound) throw FormatError(what + ": index " + std::to_string(i) + " out of range");
  return i;
}

inline void fill_tensor(Field f, Tensor3& t, const json& entries, const std::string& what) {
  if (!entries.is_array()) throw FormatError(what + " must be a list of [i, j, k, c]");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) throw FormatError(what + " entry " + e.dump() + " is not [i, j, k, c]");
    t(index(e[0], t.dim(0), what), index(e[1], t.dim(1), what), index(e[2], t.dim(2), what)) = scalar(f, e[3]);
  }
}

inline json tensor_json(const Tensor3& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim(0); ++i)
    for (std::size_t j = 0; j < t.dim(1); ++j)
      for (std::size_t k = 0; k < t.dim(2); ++k)
        if (!t(i, j, k).is_zero()) out.push_back({i, j, k, scalar_json(t(i, j, k))});
  return out;
}

inline Matrix matrix(Field f, const json& rows, std::size_t r, std::size_t c, const std::string& what) {
  if (!rows.is_array() || rows.size() != r) throw FormatError(what + " needs " + std::to_string(r) + " rows");
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    Vec row = vec(f, rows[i], c, what + " row");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = row[j];
  }
  return m;
}

inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& key, std::size_t parts) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto bar = key.find('|', start);
    out.push_back(key.substr(start, bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (out.size() != parts) throw FormatError("key '" + key + "' needs " + std::to_string(parts) + " object names");
  return out;
}

inline std::string str(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_string()) throw FormatError(what + " needs a string \"" + key + "\"");
  return j[key].get<std::string>();
}

inline FiniteGroup group(const json& j, const std::string& name) {
  try {
    if (j.is_string()) return FiniteGroup::by_name(j.get<std::string>());
    if (!j.is_object() || !j.contains("table")) throw FormatError("group " + name + " needs a name or a table");
    auto table = j["table"].get<std::vector<std::vector<Index>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(names));
  } catch (const StructuralError& e) {
    throw FormatError("group " + name + ": " + e.what());
  } catch (const json::exception& e) {
    throw FormatError("group " + name + ": " + e.what());
  }
}

inline HopfAlgebra hopf(const Workspace& ws, const json& j, const std::string& name) {
  const Field f = ws.field;
  if (!j.is_object()) throw FormatError("Hopf algebra " + name + " must be an object");
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "group-algebra") return build_group_algebra(ws.group(str(j, "group", name)), f);
    if (kind == "dual-group") return build_dual_group_hopf(ws.group(str(j, "group", name)), f);
    if (kind == "sweedler") return build_sweedler(f);
    if (kind == "dual") return dualize(ws.hopf_algebra(str(j, "of", name)));
    throw FormatError("Hopf algebra " + name + ": unknown kind '" + kind + "'");
  }
  if (!j.contains("basis")) throw FormatError("Hopf algebra " + name + " needs \"kind\" or \"basis\"");
  const auto basis = j["basis"].get<std::vector<std::string>>();
  const std::size_t n = basis.size();
  HopfAlgebra h{f, basis, Tensor3(f, n, n, n), vec(f, j.at("unit"), n, name + " unit"), Tensor3(f, n, n, n),
                vec(f, j.at("counit"), n, name + " counit"), Matrix(f, n, n)};
  fill_tensor(f, h.mult, j.at("mult"), name + " mult");
  fill_tensor(f, h.comult, j.at("comult"), name + " comult");
  for (const auto& e : j.at("antipode")) {
    if (!e.is_array() || e.size() != 3) throw FormatError(name + " antipode entry " + e.dump() + " is not [i, j, c]");
    h.antipode(index(e[0], n, "antipode"), index(e[1], n, "antipode")) = scalar(f, e[2]);
  }
  return h;
}

inline json hopf_json(const HopfAlgebra& h) {
  json a = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (!h.antipode(i, j).is_zero()) a.push_back({i, j, scalar_json(h.antipode(i, j))});
  return {{"basis", h.basis},         {"mult", tensor_json(h.mult)},     {"unit", vec_json(h.unit)},
          {"comult", tensor_json(h.comult)}, {"counit", vec_json(h.counit)}, {"antipode", a}};
}

inline LinSemicat category(const Workspace& ws, const json& j, const std::string& name) {
  const Field f = ws.field;
  if (!j.is_object()) throw FormatError("category " + name + " must be an object");
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "three-cycle") return three_cycle_category(f);
    if (kind == "point") return point_category(f, "*");
    if (kind == "product-point") return product_point_category(f);
    if (kind == "two-point") return two_point_category(f);
    throw FormatError("category " + name + ": unknown kind '" + kind + "'");
  }
  const auto objects = j.at("objects").get<std::vector<std::string>>();
  const std::size_t n = objects.size();
  auto find = [&](const std::string& o) {
    for (std::size_t i = 0; i < n; ++i)
      if (objects[i] == o) return i;
    throw FormatError("category " + name + ": unknown object '" + o + "'");
  };
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::vector<std::string>>> names(n, std::vector<std::vector<std::string>>(n));
  for (const auto& [key, val] : j.at("homs").items()) {
    auto p = split(key, 2);
    const std::size_t y = find(p[0]), x = find(p[1]);
    names[y][x] = val.get<std::vector<std::string>>();
    dims[y][x] = names[y][x].size();
  }
  LinSemicat c(f, objects, dims);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (dims[y][x]) c.set_basis_names(y, x, names[y][x]);
  if (j.contains("comp"))
    for (const auto& [key, val] : j["comp"].items()) {
      auto p = split(key, 3);
      fill_tensor(f, c.comp(find(p[0]), find(p[1]), find(p[2])), val, name + " comp " + key);
    }
  if (j.contains("identities")) {
    std::vector<Vec> ids(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!j["identities"].contains(objects[x])) throw FormatError(name + ": identity of " + objects[x] + " missing");
      ids[x] = vec(f, j["identities"][objects[x]], dims[x][x], name + " identity");
    }
    c.set_identities(ids);
  }
  return c;
}

inline json category_json(const LinSemicat& c) {
  json homs = json::object(), comp = json::object();
  const std::size_t n = c.size();
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (c.dim(y, x)) homs[c.object(y) + "|" + c.object(x)] = c.basis_names(y, x);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) {
        json t = tensor_json(c.comp(z, y, x));
        if (!t.empty()) comp[c.object(z) + "|" + c.object(y) + "|" + c.object(x)] = t;
      }
  json out{{"objects", c.objects()}, {"homs", homs}, {"comp", comp}};
  if (c.is_category()) {
    json ids = json::object();
    for (std::size_t x = 0; x < n; ++x) ids[c.object(x)] = vec_json(c.identity(x));
    out["identities"] = ids;
  }
  return out;
}

inline SubgroupData subgroup_data(const LinSemicat& c, const FiniteGroup& g, const json& j, const std::string& name) {
  const std::size_t n = c.size();
  auto element = [&](const json& e) {
    if (e.is_string()) {
      try {
        return g.find(e.get<std::string>());
      } catch (const StructuralError& err) {
        throw FormatError(name + ": " + err.what());
      }
    }
    return static_cast<Index>(index(e, g.order(), name + " group element"));
  };
  SubgroupData sd;
  sd.t.assign(n, std::vector<std::optional<Index>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const json& s = j.at("stabilizers");
    if (!s.contains(c.object(x))) throw FormatError(name + ": stabilizer of " + c.object(x) + " missing");
    std::vector<Index> elems;
    for (const auto& e : s[c.object(x)]) elems.push_back(element(e));
    sd.stabilizer.push_back(g.subgroup(elems));
  }
  if (j.contains("t"))
    for (const auto& [key, val] : j["t"].items()) {
      auto p = split(key, 2);
      sd.t[c.object_index(p[0])][c.object_index(p[1])] = element(val);
    }
  return sd;
}

inline HopfAction action(const Workspace& ws, const json& j, const std::string& name) {
  const Field f = ws.field;
  if (!j.is_object()) throw FormatError("action " + name + " must be an object");
  const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "explicit";
  if (kind == "swap") return swap_action(f);
  if (kind == "restrict") {
    const HopfAction& g = ws.action(str(j, "global", name));
    CentralIdempotent e;
    for (std::size_t x = 0; x < g.cat.size(); ++x) {
      if (!j.at("idempotent").contains(g.cat.object(x))) throw FormatError(name + ": idempotent entry missing");
      e.push_back(vec(f, j["idempotent"][g.cat.object(x)], g.cat.dim(x, x), name + " idempotent"));
    }
    return restrict_global(g, e);
  }
  if (kind == "tensor") return tensor_actions(ws.action(str(j, "left", name)), ws.action(str(j, "right", name)));
  const HopfAlgebra& h = ws.hopf_algebra(str(j, "hopf", name));
  if (kind == "point") return action_on_point(h, vec(f, j.at("lambda"), h.dim(), name + " lambda"));
  const LinSemicat& c = ws.category(str(j, "category", name));
  if (kind == "trivial") return trivial_action(c, h);
  if (kind == "uniform-dual") {
    HopfAction pa = build_uniform_dual_action(c, ws.group(str(j, "group", name)));
    if (!same_structure(pa.hopf, h)) throw FormatError(name + ": uniform-dual needs hopf = dual-group of the group");
    return pa;
  }
  if (kind == "subgroup-data") {
    const FiniteGroup& g = ws.group(str(j, "group", name));
    HopfAction pa = build_from_subgroup_data(c, g, subgroup_data(c, g, j, name));
    if (!same_structure(pa.hopf, h)) throw FormatError(name + ": subgroup-data needs hopf = dual-group of the group");
    return pa;
  }
  if (kind != "explicit") throw FormatError("action " + name + ": unknown kind '" + kind + "'");
  const std::size_t n = c.size();
  HopfAction pa{c, h, {}};
  pa.act.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t m = c.dim(y, x);
      const std::string key = c.object(y) + "|" + c.object(x);
      const json& act = j.at("act");
      if (!act.contains(key)) {
        if (m != 0) throw FormatError(name + ": action at " + key + " missing");
        for (std::size_t i = 0; i < h.dim(); ++i) pa.act[y][x].push_back(Matrix(f, 0, 0));
        continue;
      }
      if (!act[key].is_array() || act[key].size() != h.dim())
        throw FormatError(name + ": action at " + key + " needs one matrix per Hopf basis element");
      for (std::size_t i = 0; i < h.dim(); ++i) pa.act[y][x].push_back(matrix(f, act[key][i], m, m, name + " " + key));
    }
  return pa;
}

inline json action_json(const HopfAction& pa) {
  json act = json::object();
  for (std::size_t y = 0; y < pa.cat.size(); ++y)
    for (std::size_t x = 0; x < pa.cat.size(); ++x) {
      if (pa.cat.dim(y, x) == 0) continue;
      json ms = json::array();
      for (const auto& m : pa.act[y][x]) ms.push_back(matrix_json(m));
      act[pa.cat.object(y) + "|" + pa.cat.object(x)] = ms;
    }
  return act;
}

}  // namespace io

/// Loads a workspace. A field given here overrides the document's field;
/// groups load first and actions last, so an entry may name earlier ones.
inline Workspace load_workspace(const json& doc, std::optional<Field> field = std::nullopt) {
  if (!doc.is_object()) throw FormatError("workspace must be a JSON object");
  Workspace ws;
  try {
    if (field) ws.field = *field;
    else if (doc.contains("field")) ws.field = Field::parse(doc["field"].get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  auto claim = [&ws](const std::string& name) {
    if (ws.has(name)) throw FormatError("duplicate name '" + name + "'");
  };
  auto section = [&doc](const char* key) { return doc.contains(key) ? doc[key] : json::object(); };
  try {
    const json groups_section = section("groups");
    for (const auto& [name, val] : groups_section.items()) {
      claim(name);
      ws.groups.emplace(name, io::group(val, name));
    }
    const json hopf_section = section("hopf");
    for (const auto& [name, val] : hopf_section.items()) {
      claim(name);
      ws.hopf.emplace(name, io::hopf(ws, val, name));
    }
    const json categories_section = section("categories");
    for (const auto& [name, val] : categories_section.items()) {
      claim(name);
      LinSemicat c = io::category(ws, val, name);
      c.check_shapes();
      ws.categories.emplace(name, std::move(c));
    }
    // Actions may refer to each other (restrict, tensor); resolve in passes.
    std::map<std::string, json> pending;
    const json actions_section = section("actions");
    for (const auto& [name, val] : actions_section.items()) {
      claim(name);
      pending.emplace(name, val);
    }
    while (!pending.empty()) {
      std::size_t before = pending.size();
      std::string last_error;
      for (auto it = pending.begin(); it != pending.end();) {
        try {
          HopfAction a = io::action(ws, it->second, it->first);
          a.check_shapes();
          ws.actions.emplace(it->first, std::move(a));
          it = pending.erase(it);
        } catch (const FormatError& e) {
          last_error = e.what();
          ++it;
        }
      }
      if (pending.size() == before) throw FormatError(last_error);
    }
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  } catch (const StructuralError& e) {
    throw FormatError(e.what());
  }
  return ws;
}

}  // namespace parthopf
