#include "hgt/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hgt {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rational rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw error("expected a rational literal (integer or \"p/q\" string)");
}

RatMat mat(const json& j, size_t rows, size_t cols) {
  if (!j.is_array() || j.size() != rows) throw error("matrix row count mismatch");
  RatMat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw error("matrix column count mismatch");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rat(j[r][c]);
  }
  return m;
}

json mat_to_json(const RatMat& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(rational_str(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

LieAlgebraSpec algebra(const json& j, const std::string& name) {
  LieAlgebraSpec a;
  a.name = name;
  a.dim = j.at("dim").get<size_t>();
  a.rep_dim = j.at("rep_dim").get<size_t>();
  if (j.contains("basis")) a.basis_names = j.at("basis").get<std::vector<std::string>>();
  a.c.assign(a.dim, std::vector<std::vector<Rational>>(a.dim, std::vector<Rational>(a.dim, Rational(0))));
  const json& st = j.at("structure");
  if (!st.is_array() || st.size() != a.dim) throw error("structure tensor shape mismatch");
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t jj = 0; jj < a.dim; ++jj)
      for (size_t k = 0; k < a.dim; ++k) a.c[i][jj][k] = rat(st[i][jj][k]);
  const json& rep = j.at("rep");
  if (!rep.is_array() || rep.size() != a.dim) throw error("representation count mismatch");
  for (size_t i = 0; i < a.dim; ++i) a.rep.push_back(mat(rep[i], a.rep_dim, a.rep_dim));
  return a;
}

json algebra_to_json(const LieAlgebraSpec& a) {
  ordered_json j;
  j["dim"] = a.dim;
  j["rep_dim"] = a.rep_dim;
  j["basis"] = a.basis_names;
  json st = json::array();
  for (size_t i = 0; i < a.dim; ++i) {
    json si = json::array();
    for (size_t jj = 0; jj < a.dim; ++jj) {
      json sj = json::array();
      for (size_t k = 0; k < a.dim; ++k) sj.push_back(rational_str(a.c[i][jj][k]));
      si.push_back(sj);
    }
    st.push_back(si);
  }
  j["structure"] = st;
  json rep = json::array();
  for (const auto& m : a.rep) rep.push_back(mat_to_json(m));
  j["rep"] = rep;
  return j;
}

GroupModel group_model(const json& j) {
  GroupModel g;
  std::string kind = j.value("model", "nilpotent_exp");
  if (kind == "nilpotent_exp") {
    g.model = BodyModel::NilpotentExp;
  } else if (kind == "rational_points") {
    g.model = BodyModel::RationalPoints;
    for (const auto& p : j.at("points")) {
      size_t n = p.size();
      g.points.push_back(mat(p, n, n));
    }
    for (const auto& fe : j.at("free_entries"))
      g.free_entries.push_back({fe[0].get<size_t>(), fe[1].get<size_t>()});
  } else {
    throw error("unknown body model: " + kind);
  }
  return g;
}

}  // namespace

CrossedModule load_crossed_module_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw error(std::string("crossed module file is not valid JSON: ") + e.what());
  }
  CrossedModule cm;
  try {
    if (j.value("format", 1) != 1) throw error("unsupported crossed module format version");
    cm.name = j.value("name", "custom");
    cm.g = algebra(j.at("g"), "g");
    cm.e = algebra(j.at("e"), "e");
    cm.taudot = mat(j.at("taudot"), cm.g.dim, cm.e.dim);
    std::string action = j.value("action", "trivial");
    if (action == "trivial")
      cm.mu_kind = ActionKind::Trivial;
    else if (action == "conjugation")
      cm.mu_kind = ActionKind::Conjugation;
    else if (action == "linear_body")
      cm.mu_kind = ActionKind::LinearByBody;
    else
      throw error("unknown action kind: " + action);
    if (j.contains("g_model")) cm.g_model = group_model(j.at("g_model"));
    if (j.contains("e_model")) cm.e_model = group_model(j.at("e_model"));
  } catch (const json::exception& e) {
    throw error(std::string("crossed module schema violation: ") + e.what());
  }
  cm.finalize();  // validates antisymmetry, Jacobi, representations, axioms
  return cm;
}

CrossedModule load_crossed_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open crossed module file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_crossed_module_json(ss.str());
}

std::string crossed_module_to_json(const CrossedModule& cm) {
  ordered_json j;
  j["format"] = 1;
  j["name"] = cm.name;
  j["g"] = algebra_to_json(cm.g);
  j["e"] = algebra_to_json(cm.e);
  j["taudot"] = mat_to_json(cm.taudot);
  j["action"] = cm.mu_kind == ActionKind::Trivial
                    ? "trivial"
                    : (cm.mu_kind == ActionKind::Conjugation ? "conjugation" : "linear_body");
  auto model = [](const GroupModel& g) {
    ordered_json m;
    if (g.model == BodyModel::NilpotentExp) {
      m["model"] = "nilpotent_exp";
    } else {
      m["model"] = "rational_points";
      json pts = json::array();
      for (const auto& p : g.points) pts.push_back(mat_to_json(p));
      m["points"] = pts;
      json fe = json::array();
      for (auto [r, c] : g.free_entries) fe.push_back(json::array({r, c}));
      m["free_entries"] = fe;
    }
    return m;
  };
  j["g_model"] = model(cm.g_model);
  j["e_model"] = model(cm.e_model);
  return j.dump(2);
}

CrossedModule resolve_crossed_module(const std::string& id_or_path) {
  if (id_or_path == "CM-T" || id_or_path == "CM-C" || id_or_path == "CM-A" || id_or_path == "CM-H")
    return shipped_cm(id_or_path);
  return load_crossed_module_file(id_or_path);
}

Scenario load_scenario_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw error(std::string("scenario file is not valid JSON: ") + e.what());
  }
  Scenario s;
  try {
    if (j.value("format", 1) != 1) throw error("unsupported scenario format version");
    s.cm_id = j.value("crossed_module", "CM-C");
    s.patches = j.value("patches", size_t(3));
    s.base_dim = j.value("base_dim", size_t(2));
    s.truncation = j.value("truncation", 6);
    s.seed = j.value("seed", uint64_t(1));
    s.bodies = j.value("bodies", 3);
    s.special = j.value("special", false);
    if (j.contains("assign"))
      for (const auto& [key, val] : j.at("assign").items()) s.assignments.push_back({key, rat(val)});
    if (j.contains("transforms"))
      for (const auto& t : j.at("transforms"))
        s.transforms.push_back({t.at("equivalence").get<size_t>(), t.value("inverse", false)});
  } catch (const json::exception& e) {
    throw error(std::string("scenario schema violation: ") + e.what());
  }
  if (s.truncation < 4) throw error("scenario truncation must be at least 4");
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scenario_json(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
  ordered_json j;
  j["format"] = 1;
  j["crossed_module"] = s.cm_id;
  j["patches"] = s.patches;
  j["base_dim"] = s.base_dim;
  j["truncation"] = s.truncation;
  j["seed"] = s.seed;
  j["bodies"] = s.bodies;
  j["special"] = s.special;
  if (!s.assignments.empty()) {
    ordered_json a;
    for (const auto& [k, v] : s.assignments) a[k] = rational_str(v);
    j["assign"] = a;
  }
  if (!s.transforms.empty()) {
    ordered_json ts = ordered_json::array();
    for (const auto& [idx, inv] : s.transforms) {
      ordered_json t;
      t["equivalence"] = idx;
      t["inverse"] = inv;
      ts.push_back(std::move(t));
    }
    j["transforms"] = ts;
  }
  return j.dump(2);
}

ScenarioRun run_scenario(const CrossedModule& cm, const Scenario& s) {
  ScenarioRun run;
  CoverOptions opt;
  opt.patches = s.patches;
  opt.base_dim = s.base_dim;
  opt.truncation = s.truncation;
  opt.special = s.special;
  run.cover = std::make_unique<CoverModel>(cm, opt, s.seed);
  run.data = run.cover->para();
  for (const auto& [idx, inv] : s.transforms) {
    if (idx >= run.cover->equivalence_count()) throw error("transform references an unknown equivalence");
    ParaEquivData q = run.cover->equivalence(idx);
    if (inv) q = run.cover->invert(q);
    run.data = run.cover->transform(run.data, q);
  }
  run.bodies = run.cover->sample_bodies(s.bodies, s.seed + 1);
  // explicit coefficient assignments override sampled bodies
  if (!s.assignments.empty()) {
    const TablePtr& table = run.cover->store().table();
    for (auto& body : run.bodies)
      for (const auto& [name, val] : s.assignments) {
        auto id = table->find(name);
        if (!id) throw error("assignment references an unknown symbol: " + name);
        body[*id] = val;
      }
  }
  return run;
}

}  // namespace hgt
