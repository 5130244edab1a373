#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "catext/charted_group.hpp"
#include "catext/extension.hpp"

namespace catext {

using Json = nlohmann::json;

namespace detail {

// Schema problems are refusals: the input was readable JSON but does not
// describe the object the verb needs.
[[noreturn]] inline void bad_schema(const std::string& where, const std::string& what) {
  Report rep;
  rep.fail("input.schema", "(" + where + ")");
  throw Refusal(where + ": " + what, rep);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad_schema(where, "missing field '" + key + "'");
  return j.at(key);
}

inline int int_field(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) bad_schema(where, "field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::bad_schema(path, "cannot open file");
  // parse errors surface the byte offset; keep the path in the message
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    Report rep;
    rep.fail("input.malformed-json", "(" + path + ")");
    throw Refusal(path + ": " + e.what(), rep);
  }
}

// ---- finite groups ----------------------------------------------------

inline FiniteGroup finite_group_from_json(const Json& j, const std::string& where) {
  std::string type = detail::field(j, "type", where).get<std::string>();
  if (type == "cyclic") {
    int n = detail::int_field(j, "n", where);
    if (n < 1) detail::bad_schema(where, "cyclic order must be positive");
    return cyclic_group(n);
  }
  if (type == "table") {
    const Json& rows = detail::field(j, "table", where);
    if (!rows.is_array()) detail::bad_schema(where, "'table' must be an array of rows");
    std::vector<std::vector<int>> t;
    for (const auto& r : rows) t.push_back(r.get<std::vector<int>>());
    FiniteGroup g;
    try {
      g = group_from_table(t);
    } catch (const std::invalid_argument& e) {
      detail::bad_schema(where, e.what());
    }
    Report wf = verify_finite_group(g);
    if (!wf.passed()) throw Refusal(where + ": table is not a group", wf);
    return g;
  }
  detail::bad_schema(where, "unknown group type '" + type + "'");
}

inline Json finite_group_to_json(const FiniteGroup& g) {
  Json rows = Json::array();
  for (int i = 0; i < g.order; ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.order; ++j) row.push_back(g.mul(i, j));
    rows.push_back(row);
  }
  return Json{{"type", "table"}, {"table", rows}};
}

// ---- abelian groups, homs, cochains -----------------------------------

inline FgAbelianGroup abelian_from_json(const Json& j, const std::string& where) {
  FgAbelianGroup g;
  g.rank = detail::int_field(j, "rank", where);
  if (g.rank < 0) detail::bad_schema(where, "rank must be nonnegative");
  const Json& tor = detail::field(j, "torsion", where);
  if (!tor.is_array()) detail::bad_schema(where, "'torsion' must be an array");
  for (const auto& d : tor) g.torsion.push_back(Int(d.get<long long>()));
  if (!g.canonical())
    detail::bad_schema(where, "torsion must be a divisor chain of factors >= 2");
  return g;
}

inline Json abelian_to_json(const FgAbelianGroup& g) {
  Json tor = Json::array();
  for (const auto& d : g.torsion) tor.push_back(d.convert_to<long long>());
  return Json{{"rank", g.rank}, {"torsion", tor}};
}

inline AbelianHom hom_from_json(const Json& j, const std::string& where) {
  AbelianHom h;
  h.source = abelian_from_json(detail::field(j, "source", where), where + ".source");
  h.target = abelian_from_json(detail::field(j, "target", where), where + ".target");
  const Json& rows = detail::field(j, "matrix", where);
  if (!rows.is_array()) detail::bad_schema(where, "'matrix' must be an array of rows");
  std::vector<std::vector<long long>> m;
  for (const auto& r : rows) m.push_back(r.get<std::vector<long long>>());
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != h.source.gens())
      detail::bad_schema(where, "matrix columns must match source generators");
  if (static_cast<int>(m.size()) != h.target.gens())
    detail::bad_schema(where, "matrix rows must match target generators");
  h.matrix = ZMat::from_rows(m);
  Report wf = verify_hom(h);
  if (!wf.passed()) throw Refusal(where + ": map is not well defined", wf);
  return h;
}

inline Json hom_to_json(const AbelianHom& h) {
  Json rows = Json::array();
  for (int i = 0; i < h.matrix.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < h.matrix.cols; ++j) row.push_back(h.matrix(i, j).convert_to<long long>());
    rows.push_back(row);
  }
  return Json{{"source", abelian_to_json(h.source)},
              {"target", abelian_to_json(h.target)},
              {"matrix", rows}};
}

// Sparse cochain values keyed by "(g1,...,gn)" over nonunit arguments;
// missing tuples are zero.
inline Cochain cochain_from_json(const Json& j, int degree, GAction action,
                                 const std::string& where) {
  int jd = detail::int_field(j, "degree", where);
  if (jd != degree) detail::bad_schema(where, "expected a degree " + std::to_string(degree) + " cochain");
  Cochain c = Cochain::zero(degree, std::move(action));
  const Json& values = detail::field(j, "values", where);
  if (!values.is_object()) detail::bad_schema(where, "'values' must be an object");
  for (const auto& [key, val] : values.items()) {
    std::vector<int> tuple;
    std::stringstream ss(key);
    char ch = 0;
    ss >> ch;
    if (ch != '(') detail::bad_schema(where, "tuple key '" + key + "' must look like (1,2)");
    for (int k = 0; k < degree; ++k) {
      int g = 0;
      ss >> g >> ch;
      if (!ss || (k + 1 < degree && ch != ',') || (k + 1 == degree && ch != ')'))
        detail::bad_schema(where, "tuple key '" + key + "' must list " + std::to_string(degree) +
                                      " indices");
      if (g < 0 || g >= c.group().order)
        detail::bad_schema(where, "tuple key '" + key + "' indexes outside the group");
      tuple.push_back(g);
    }
    El v;
    if (!val.is_array()) detail::bad_schema(where, "value at '" + key + "' must be an array");
    for (const auto& x : val) v.push_back(Int(x.get<long long>()));
    if (static_cast<int>(v.size()) != c.coeff().gens())
      detail::bad_schema(where, "value at '" + key + "' has the wrong coordinate count");
    try {
      c.set(tuple, v);
    } catch (const std::invalid_argument& e) {
      detail::bad_schema(where, e.what());
    }
  }
  return c;
}

inline Json cochain_to_json(const Cochain& c) {
  Json values = Json::object();
  int ord = c.group().order;
  std::vector<int> tuple(c.degree, 1);
  auto advance = [&]() {
    for (int k = c.degree - 1; k >= 0; --k) {
      if (++tuple[k] < ord) return true;
      tuple[k] = 1;
    }
    return false;
  };
  if (c.degree > 0 && ord > 1) {
    do {
      El v = c.value_at(tuple);
      bool zero = true;
      for (const auto& x : v) zero = zero && x == 0;
      if (zero) continue;
      std::string key = "(";
      for (int k = 0; k < c.degree; ++k) key += std::to_string(tuple[k]) + (k + 1 < c.degree ? "," : ")");
      Json arr = Json::array();
      for (const auto& x : v) arr.push_back(x.convert_to<long long>());
      values[key] = arr;
    } while (advance());
  }
  return Json{{"degree", c.degree}, {"values", values}};
}

// ---- generalized cocycles ---------------------------------------------

inline GeneralizedCocycle generalized_cocycle_from_json(const Json& j, const std::string& where) {
  FiniteGroup g = finite_group_from_json(detail::field(j, "group", where), where + ".group");
  AbelianHom tau = hom_from_json(detail::field(j, "tau", where), where + ".tau");
  Cochain f = cochain_from_json(detail::field(j, "f", where), 2,
                                GAction::trivial(g, tau.target), where + ".f");
  Cochain theta = cochain_from_json(detail::field(j, "theta", where), 3,
                                    GAction::trivial(g, tau.source), where + ".theta");
  return {std::move(tau), std::move(f), std::move(theta)};
}

inline Json generalized_cocycle_to_json(const GeneralizedCocycle& gc) {
  return Json{{"group", finite_group_to_json(gc.base())},
              {"tau", hom_to_json(gc.tau)},
              {"f", cochain_to_json(gc.f)},
              {"theta", cochain_to_json(gc.theta)}};
}

// ---- 2-groups ----------------------------------------------------------

inline TwoGroup two_group_from_json(const Json& j, const std::string& where) {
  TwoGroup t;
  t.n_obj = detail::int_field(j, "n_obj", where);
  t.n_mor = detail::int_field(j, "n_mor", where);
  if (t.n_obj < 1 || t.n_mor < 1) detail::bad_schema(where, "object and morphism counts must be positive");
  auto flat = [&](const char* key, std::size_t want) {
    const Json& v = detail::field(j, key, where);
    if (!v.is_array()) detail::bad_schema(where, std::string("'") + key + "' must be an array");
    std::vector<int> out = v.get<std::vector<int>>();
    if (out.size() != want)
      detail::bad_schema(where, std::string("'") + key + "' must have " + std::to_string(want) +
                                    " entries");
    return out;
  };
  std::size_t no = t.n_obj, nm = t.n_mor;
  t.src = flat("src", nm);
  t.tgt = flat("tgt", nm);
  t.idm = flat("idm", no);
  t.comp = flat("comp", nm * nm);
  t.tens_obj = flat("tens_obj", no * no);
  t.tens_mor = flat("tens_mor", nm * nm);
  t.inv_obj = flat("inv_obj", no);
  t.inv_mor = flat("inv_mor", nm);
  t.assoc = flat("assoc", no * no * no);
  auto in_obj = [&](const std::vector<int>& v) {
    for (int x : v)
      if (x < 0 || x >= t.n_obj) return false;
    return true;
  };
  auto in_mor = [&](const std::vector<int>& v, bool allow_gap) {
    for (int x : v)
      if (x >= t.n_mor || x < (allow_gap ? -1 : 0)) return false;
    return true;
  };
  if (!in_obj(t.src) || !in_obj(t.tgt) || !in_obj(t.inv_obj) || !in_obj(t.tens_obj) ||
      !in_obj(t.assoc) || !in_mor(t.idm, false) || !in_mor(t.comp, true) ||
      !in_mor(t.tens_mor, false) || !in_mor(t.inv_mor, false))
    detail::bad_schema(where, "table entry indexes outside the object or morphism range");
  return t;
}

inline Json two_group_to_json(const TwoGroup& t) {
  return Json{{"n_obj", t.n_obj},   {"n_mor", t.n_mor},       {"src", t.src},
              {"tgt", t.tgt},       {"idm", t.idm},           {"comp", t.comp},
              {"tens_obj", t.tens_obj}, {"tens_mor", t.tens_mor}, {"inv_obj", t.inv_obj},
              {"inv_mor", t.inv_mor},   {"assoc", t.assoc}};
}

// ---- numeric payloads ---------------------------------------------------

inline LieAlgebraCocycle omega_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) detail::bad_schema(where, "cocycle table must be an m x n x n array");
  std::vector<std::vector<Vec>> table;
  for (const auto& plane : j) {
    if (!plane.is_array()) detail::bad_schema(where, "cocycle table must be an m x n x n array");
    std::vector<Vec> rows;
    for (const auto& row : plane) rows.push_back(row.get<Vec>());
    table.push_back(std::move(rows));
  }
  try {
    return lie_cocycle_from_table(table);
  } catch (const std::invalid_argument& e) {
    detail::bad_schema(where, e.what());
  }
}

inline Vec vec_from_json(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    detail::bad_schema(where, "expected an array of " + std::to_string(dim) + " coordinates");
  return j.get<Vec>();
}

// ---- reports ------------------------------------------------------------

inline Json findings_to_json(const Report& rep) {
  Json arr = Json::array();
  for (const auto& f : rep.findings) {
    Json e{{"severity", f.severity == Severity::fail ? "fail" : "info"},
           {"check", f.check},
           {"witness", f.witness}};
    if (f.value) e["value"] = *f.value;
    if (f.tolerance) e["tolerance"] = *f.tolerance;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace catext
