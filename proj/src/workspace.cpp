#include "coralg/workspace.hpp"

#include <fstream>
#include <sstream>

namespace coralg {

using nlohmann::json;

namespace {

const json& need(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

Scalar scalar_from_json(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": scalar must be a string like \"p/q\" or an integer");
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("GF")) {
    try {
      return Field::gf(j.at("GF").get<std::uint64_t>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"GF\": p}");
}

}  // namespace

json scalar_to_json(const Scalar& s) { return s.str(); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (int i = 0; i < v.rows(); ++i) arr.push_back(v.at(i, 0).str());
  return arr;
}

Matrix matrix_from_json(const Field& f, const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw ParseError(where + ": matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw ParseError(where + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = scalar_from_json(f, j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                                    where);
  }
  return m;
}

Vector vector_from_json(const Field& f, const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": vector must be an array");
  Vector v(f, static_cast<int>(j.size()), 1);
  for (int i = 0; i < v.rows(); ++i)
    v.at(i, 0) = scalar_from_json(f, j[static_cast<std::size_t>(i)], where);
  return v;
}

json report_to_json(const Report& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    json entry;
    entry["clause"] = c.clause;
    entry["ok"] = c.ok;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    clauses.push_back(std::move(entry));
  }
  return json{{"pass", r.pass}, {"clauses", std::move(clauses)}};
}

Workspace load_workspace(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");

  Workspace ws;
  ws.field = field_from_json(need(doc, "field", "document"));
  const Field f = ws.field;

  if (doc.contains("algebras")) {
    for (const auto& [name, body] : doc.at("algebras").items()) {
      const std::string where = "algebras." + name;
      const int dim = need(body, "dim", where).get<int>();
      std::vector<std::string> basis;
      if (body.contains("basis"))
        for (const auto& b : body.at("basis")) basis.push_back(b.get<std::string>());
      const json& mu_j = need(body, "mu", where);
      if (static_cast<int>(mu_j.size()) != dim) throw ParseError(where + ": mu outer size != dim");
      std::vector<std::vector<std::vector<Scalar>>> mu(
          static_cast<std::size_t>(dim),
          std::vector<std::vector<Scalar>>(static_cast<std::size_t>(dim),
                                           std::vector<Scalar>(static_cast<std::size_t>(dim),
                                                               Scalar::zero(f))));
      for (int i = 0; i < dim; ++i) {
        const json& row = mu_j[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != dim) throw ParseError(where + ": mu row size != dim");
        for (int jj = 0; jj < dim; ++jj) {
          const json& cell = row[static_cast<std::size_t>(jj)];
          if (static_cast<int>(cell.size()) != dim)
            throw ParseError(where + ": mu cell size != dim");
          for (int l = 0; l < dim; ++l)
            mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]
              [static_cast<std::size_t>(l)] =
                  scalar_from_json(f, cell[static_cast<std::size_t>(l)], where);
        }
      }
      const Vector unit = vector_from_json(f, need(body, "unit", where), where + ".unit");
      ws.algebras.emplace(name, make_algebra(f, dim, mu, unit, std::move(basis)));
    }
  }

  auto find_algebra = [&](const std::string& name, const std::string& where) -> const Algebra& {
    auto it = ws.algebras.find(name);
    if (it == ws.algebras.end()) throw ParseError(where + ": unknown algebra '" + name + "'");
    return it->second;
  };

  if (doc.contains("extensions")) {
    for (const auto& [name, body] : doc.at("extensions").items()) {
      const std::string where = "extensions." + name;
      const Algebra& src = find_algebra(need(body, "source", where).get<std::string>(), where);
      const Algebra& dst = find_algebra(need(body, "target", where).get<std::string>(), where);
      const Matrix m = matrix_from_json(f, need(body, "matrix", where), where + ".matrix");
      ws.extensions.emplace(name, check_ring_map(m, src, dst));
    }
  }

  if (doc.contains("bimodules")) {
    for (const auto& [name, body] : doc.at("bimodules").items()) {
      const std::string where = "bimodules." + name;
      const Algebra& lr = find_algebra(need(body, "left_ring", where).get<std::string>(), where);
      const Algebra& rr = find_algebra(need(body, "right_ring", where).get<std::string>(), where);
      std::vector<Matrix> lact, ract;
      for (const auto& m : need(body, "left_act", where))
        lact.push_back(matrix_from_json(f, m, where + ".left_act"));
      for (const auto& m : need(body, "right_act", where))
        ract.push_back(matrix_from_json(f, m, where + ".right_act"));
      ws.bimodules.emplace(name, make_bimodule(lr, rr, std::move(lact), std::move(ract)));
    }
  }

  if (doc.contains("corings")) {
    for (const auto& [name, body] : doc.at("corings").items()) {
      const std::string where = "corings." + name;
      Workspace::CoringEntry entry;
      if (body.contains("trivial_of")) {
        entry.coring = trivial_coring(find_algebra(body.at("trivial_of").get<std::string>(), where));
      } else if (body.contains("sweedler_of")) {
        const std::string ext_name = body.at("sweedler_of").get<std::string>();
        auto it = ws.extensions.find(ext_name);
        if (it == ws.extensions.end())
          throw ParseError(where + ": unknown extension '" + ext_name + "'");
        SweedlerCoring sw = sweedler_coring(it->second);
        entry.coring = sw.coring;
        entry.sweedler = std::move(sw);
      } else {
        const Algebra& base = find_algebra(need(body, "base", where).get<std::string>(), where);
        const std::string carrier_name = need(body, "carrier", where).get<std::string>();
        auto it = ws.bimodules.find(carrier_name);
        if (it == ws.bimodules.end())
          throw ParseError(where + ": unknown bimodule '" + carrier_name + "'");
        const Matrix delta_raw =
            matrix_from_json(f, need(body, "coproduct_raw", where), where + ".coproduct_raw");
        const Matrix counit = matrix_from_json(f, need(body, "counit", where), where + ".counit");
        entry.coring = make_coring(base, it->second, delta_raw, counit);
      }
      ws.corings.emplace(name, std::move(entry));
    }
  }

  if (doc.contains("certificates")) {
    for (const auto& [name, body] : doc.at("certificates").items()) {
      const std::string where = "certificates." + name;
      Workspace::Certificate cert;
      cert.type = need(body, "type", where).get<std::string>();
      if (cert.type == "reduced_system" || cert.type == "frobenius_system") {
        cert.target = need(body, "coring", where).get<std::string>();
        if (ws.corings.find(cert.target) == ws.corings.end())
          throw ParseError(where + ": unknown coring '" + cert.target + "'");
        const char* key = cert.type == "reduced_system" ? "gamma" : "pi";
        cert.map = matrix_from_json(f, need(body, key, where), where);
        cert.element = vector_from_json(f, need(body, "e", where), where + ".e");
      } else if (cert.type == "extension_data") {
        cert.target = need(body, "extension", where).get<std::string>();
        if (ws.extensions.find(cert.target) == ws.extensions.end())
          throw ParseError(where + ": unknown extension '" + cert.target + "'");
        cert.map = matrix_from_json(f, need(body, "E", where), where + ".E");
        cert.element = vector_from_json(f, need(body, "beta", where), where + ".beta");
      } else {
        throw ParseError(where + ": unknown certificate type '" + cert.type + "'");
      }
      ws.certificates.emplace(name, std::move(cert));
    }
  }
  return ws;
}

Workspace load_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_workspace(buf.str());
}

namespace {

// Runs the verifier appropriate to a certificate; object validity for the
// other kinds was already established on load.
Report check_certificate(const Workspace& ws, const Workspace::Certificate& cert) {
  if (cert.type == "extension_data") {
    const RingMap& ext = ws.extensions.at(cert.target);
    return verify_frobenius_extension(ext, cert.map, cert.element).report;
  }
  const Coring& coring = ws.corings.at(cert.target).coring;
  if (cert.type == "reduced_system") return verify_reduced_system(coring, cert.map, cert.element);
  return verify_frobenius_system(coring, cert.map, cert.element);
}

json certificate_to_json(const std::string& coring_name, const ReducedFrobeniusSystem& sys,
                         const Report& rep) {
  json out;
  out["type"] = "reduced_system";
  out["coring"] = coring_name;
  out["gamma"] = matrix_to_json(sys.gamma);
  out["e"] = vector_to_json(sys.e);
  out["verified"] = rep.pass;
  out["clauses"] = report_to_json(rep)["clauses"];
  return out;
}

}  // namespace

ToolResult cmd_check(const std::string& json_text, const std::string& object_name) {
  ToolResult result;
  Workspace ws;
  try {
    ws = load_workspace(json_text);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.output = json{{"error", "parse"}, {"detail", e.what()}};
    return result;
  } catch (const ValidationError& e) {
    result.exit_code = 1;
    result.output = json{{"error", e.code}, {"detail", e.detail}, {"pass", false}};
    return result;
  }

  auto found_kind = [&]() -> std::string {
    if (ws.algebras.count(object_name)) return "algebra";
    if (ws.extensions.count(object_name)) return "extension";
    if (ws.bimodules.count(object_name)) return "bimodule";
    if (ws.corings.count(object_name)) return "coring";
    if (ws.certificates.count(object_name)) return "certificate";
    return "";
  }();
  if (found_kind.empty()) {
    result.exit_code = 2;
    result.output = json{{"error", "usage"}, {"detail", "no object named '" + object_name + "'"}};
    return result;
  }

  if (found_kind == "certificate") {
    try {
      const Report rep = check_certificate(ws, ws.certificates.at(object_name));
      result.exit_code = rep.pass ? 0 : 1;
      result.output = report_to_json(rep);
      result.output["object"] = object_name;
      result.output["kind"] = found_kind;
      return result;
    } catch (const ValidationError& e) {
      result.exit_code = 1;
      result.output = json{{"error", e.code}, {"detail", e.detail}, {"pass", false}};
      return result;
    }
  }
  // Constructed (hence validated) on load.
  result.exit_code = 0;
  result.output = json{{"pass", true}, {"object", object_name}, {"kind", found_kind}};
  return result;
}

ToolResult cmd_find_frobenius(const std::string& json_text, const std::string& coring_name,
                              const FindOptions& opts) {
  ToolResult result;
  Workspace ws;
  try {
    ws = load_workspace(json_text);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.output = json{{"error", "parse"}, {"detail", e.what()}};
    return result;
  } catch (const ValidationError& e) {
    result.exit_code = 1;
    result.output = json{{"error", e.code}, {"detail", e.detail}};
    return result;
  }
  auto it = ws.corings.find(coring_name);
  if (it == ws.corings.end()) {
    result.exit_code = 2;
    result.output = json{{"error", "usage"}, {"detail", "no coring named '" + coring_name + "'"}};
    return result;
  }
  const Coring& coring = it->second.coring;

  FindReducedConfig config;
  config.trials = opts.trials;
  config.coeff_bound = opts.coeff_bound;
  config.seed = opts.seed;
  for (const std::string& cand : opts.e_candidates) {
    std::stringstream ss(cand);
    std::string tok;
    std::vector<Scalar> entries;
    while (std::getline(ss, tok, ','))
      entries.push_back(Scalar::parse(ws.field, tok));
    Vector v(ws.field, static_cast<int>(entries.size()), 1);
    for (int i = 0; i < v.rows(); ++i) v.at(i, 0) = entries[static_cast<std::size_t>(i)];
    config.e_candidates.push_back(std::move(v));
  }
  if (it->second.sweedler)  // grouplike from the construction
    config.e_candidates.push_back(it->second.sweedler->grouplike);

  const FindReducedResult res = find_reduced_system(coring, config);
  json diag;
  diag["gamma_space_dim"] = res.gamma_space_dim;
  diag["invariants_dim"] = res.invariants_dim;
  diag["dual_left_dim"] = res.dual_left_dim;
  diag["dual_right_dim"] = res.dual_right_dim;
  diag["candidates_tried"] = res.candidates_tried;
  diag["seed"] = res.seed;
  if (res.ext_evidence) {
    json ev;
    ev["status"] = res.ext_evidence->status == FindExtensionResult::Status::Found
                       ? "found"
                       : (res.ext_evidence->status == FindExtensionResult::Status::ExtractionFailed
                              ? "extraction_failed"
                              : "no_iso_evidence");
    ev["max_rank"] = res.ext_evidence->max_rank;
    ev["needed_rank"] = res.ext_evidence->needed_rank;
    ev["theta_dim"] = res.ext_evidence->theta_dim;
    ev["certain"] = res.ext_evidence->certain;
    diag["base_to_dual_ring"] = std::move(ev);
    diag["hom_cs_dim"] = res.hom_cs_dim;
    diag["hom_cs_max_rank"] = res.hom_cs_max_rank;
  }

  switch (res.status) {
    case FindReducedResult::Status::Found: {
      const Report rep = verify_reduced_system(coring, res.system->gamma, res.system->e);
      result.exit_code = 0;
      result.output = certificate_to_json(coring_name, *res.system, rep);
      break;
    }
    case FindReducedResult::Status::NotFoundWithinSearch:
      result.exit_code = 3;
      result.output = json{{"status", "not_found_within_search"}, {"diagnostics", diag}};
      break;
    case FindReducedResult::Status::CertifiedNotFrobenius:
      result.exit_code = 4;
      result.output = json{{"status", "certified_not_frobenius"},
                           {"obstruction", res.obstruction},
                           {"diagnostics", diag}};
      break;
  }
  return result;
}

ToolResult cmd_tower(const std::string& json_text, const std::string& coring_name, int levels,
                     int budget, const FindOptions& opts) {
  ToolResult result;
  Workspace ws;
  try {
    ws = load_workspace(json_text);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.output = json{{"error", "parse"}, {"detail", e.what()}};
    return result;
  } catch (const ValidationError& e) {
    result.exit_code = 1;
    result.output = json{{"error", e.code}, {"detail", e.detail}};
    return result;
  }
  auto it = ws.corings.find(coring_name);
  if (it == ws.corings.end()) {
    result.exit_code = 2;
    result.output = json{{"error", "usage"}, {"detail", "no coring named '" + coring_name + "'"}};
    return result;
  }
  const Coring& coring = it->second.coring;

  // A Frobenius system for the coring: from a stored certificate when one
  // applies, otherwise discovered by the solver.
  std::optional<FrobeniusSystem> system;
  std::string system_source;
  try {
    for (const auto& [cert_name, cert] : ws.certificates) {
      if (cert.type == "frobenius_system" && cert.target == coring_name) {
        if (!verify_frobenius_system(coring, cert.map, cert.element).pass) continue;
        system = FrobeniusSystem{cert.map, cert.element};
        system_source = cert_name;
        break;
      }
      if (cert.type == "reduced_system" && cert.target == coring_name) {
        if (!verify_reduced_system(coring, cert.map, cert.element).pass) continue;
        system = FrobeniusSystem{pi_from_gamma(coring, cert.map), cert.element};
        system_source = cert_name;
        break;
      }
      if (cert.type == "extension_data" && it->second.sweedler) {
        // data for the extension the coring was built from
        const SweedlerCoring& sw = *it->second.sweedler;
        bool matches = false;
        for (const auto& [ext_name, ext] : ws.extensions)
          if (ext_name == cert.target && ext.matrix == sw.ext.matrix &&
              ext.source.dim == sw.ext.source.dim && ext.target.dim == sw.ext.target.dim) {
            matches = true;
            break;
          }
        if (!matches) continue;
        const ExtensionVerification ver = verify_frobenius_extension(sw.ext, cert.map, cert.element);
        if (!ver.report.pass) continue;
        FrobeniusExtensionData data;
        data.ext = sw.ext;
        data.hom = cert.map;
        data.element = cert.element;
        data.bb = ver.bb;
        system = sweedler_frobenius_system(sw, data).system;
        system_source = cert_name;
        break;
      }
    }
    if (!system) {
      FindReducedConfig config;
      config.trials = opts.trials;
      config.coeff_bound = opts.coeff_bound;
      config.seed = opts.seed;
      if (it->second.sweedler) config.e_candidates.push_back(it->second.sweedler->grouplike);
      const FindReducedResult res = find_reduced_system(coring, config);
      if (res.status != FindReducedResult::Status::Found) {
        result.exit_code = res.status == FindReducedResult::Status::CertifiedNotFrobenius ? 4 : 3;
        result.output = json{{"status", "no_frobenius_system"},
                             {"detail", res.obstruction.empty()
                                            ? "search did not produce a system"
                                            : res.obstruction}};
        return result;
      }
      system = FrobeniusSystem{pi_from_gamma(coring, res.system->gamma), res.system->e};
      system_source = "search";
    }

    const std::vector<TowerLevel> tower =
        build_tower(coring, system->pi, system->e, levels, budget);
    json levels_json = json::array();
    for (const TowerLevel& level : tower) {
      json lj;
      lj["k"] = level.k;
      lj["dim"] = level.ring.dim;
      json gates;
      for (const auto& clause : level.gates.clauses) gates[clause.clause] = clause.ok;
      lj["verified"] = std::move(gates);
      if (level.index) {
        lj["index"] = json::array({level.index->u.str(), level.index->v.str()});
        lj["index_ratio"] = (level.index->u / level.index->v).str();
      } else {
        lj["index"] = nullptr;
        lj["index_witness"] = level.index_witness;
      }
      levels_json.push_back(std::move(lj));
    }
    result.output = json{{"coring", coring_name},
                         {"system_source", system_source},
                         {"base_dim", coring.base.dim},
                         {"levels", std::move(levels_json)}};
    bool all_indexed = true;
    for (const TowerLevel& level : tower)
      if (!level.index) all_indexed = false;
    if (all_indexed && !tower.empty()) {
      const IndexProfile prof = tower_index_profile(tower);
      result.output["index_alternation"] = prof.alternation_ok;
    }
    result.exit_code = 0;
  } catch (const ValidationError& e) {
    if (e.code == "DimensionBudgetExceeded") {
      result.exit_code = 5;
      result.output = json{{"error", e.code}, {"detail", e.detail}};
    } else {
      result.exit_code = 1;
      result.output = json{{"error", e.code}, {"detail", e.detail}};
    }
  }
  return result;
}

}  // namespace coralg
