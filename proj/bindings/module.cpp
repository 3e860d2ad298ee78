// Python bindings: the main operations over JSON workspace documents.
// Results come back as JSON strings; the coralg package wraps them in dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coralg/workspace.hpp"

namespace py = pybind11;

namespace {

std::string run_check(const std::string& doc, const std::string& object_name) {
  coralg::ToolResult r = coralg::cmd_check(doc, object_name);
  r.output["exit_code"] = r.exit_code;
  return r.output.dump();
}

std::string run_find_reduced(const std::string& doc, const std::string& coring, int trials,
                             long long coeff_bound, std::uint64_t seed,
                             const std::vector<std::string>& e_candidates) {
  coralg::FindOptions opts;
  opts.trials = trials;
  opts.coeff_bound = coeff_bound;
  opts.seed = seed;
  opts.e_candidates = e_candidates;
  coralg::ToolResult r = coralg::cmd_find_frobenius(doc, coring, opts);
  r.output["exit_code"] = r.exit_code;
  return r.output.dump();
}

std::string run_find_extension(const std::string& doc, const std::string& extension, int trials,
                               long long coeff_bound, std::uint64_t seed) {
  using nlohmann::json;
  coralg::Workspace ws = coralg::load_workspace(doc);
  auto it = ws.extensions.find(extension);
  if (it == ws.extensions.end())
    throw std::invalid_argument("no extension named '" + extension + "'");
  const coralg::FindExtensionResult res =
      coralg::find_frobenius_extension_data(it->second, trials, seed, coeff_bound);
  json out;
  out["status"] = res.status == coralg::FindExtensionResult::Status::Found
                      ? "found"
                      : (res.status == coralg::FindExtensionResult::Status::ExtractionFailed
                             ? "extraction_failed"
                             : "no_iso_evidence");
  out["max_rank"] = res.max_rank;
  out["needed_rank"] = res.needed_rank;
  out["theta_dim"] = res.theta_dim;
  out["dual_dim"] = res.dual_dim;
  out["certain"] = res.certain;
  out["trials_used"] = res.trials_used;
  if (res.data) {
    out["E"] = coralg::matrix_to_json(res.data->hom);
    out["beta"] = coralg::vector_to_json(res.data->element);
  }
  return out.dump();
}

std::string run_tower(const std::string& doc, const std::string& coring, int levels, int budget,
                      std::uint64_t seed, int trials) {
  coralg::FindOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  coralg::ToolResult r = coralg::cmd_tower(doc, coring, levels, budget, opts);
  r.output["exit_code"] = r.exit_code;
  return r.output.dump();
}

std::string run_solve(const std::string& field, const std::vector<std::vector<std::string>>& m,
                      const std::vector<std::string>& rhs) {
  using nlohmann::json;
  const coralg::Field f = field == "Q" ? coralg::Field::rationals()
                                       : coralg::Field::gf(std::stoull(field));
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  coralg::Matrix mat(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) mat.at(i, j) = coralg::Scalar::parse(f, m[i][j]);
  coralg::Vector b(f, static_cast<int>(rhs.size()), 1);
  for (int i = 0; i < b.rows(); ++i) b.at(i, 0) = coralg::Scalar::parse(f, rhs[i]);
  const coralg::SolveResult sol = coralg::solve(mat, b);
  json out;
  out["consistent"] = sol.consistent;
  if (sol.consistent) out["x"] = coralg::vector_to_json(sol.x);
  out["kernel"] = coralg::matrix_to_json(sol.kernel);
  out["rank"] = coralg::rank(mat);
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_coralg, m) {
  m.doc() = "exact corings, Frobenius systems and towers";
  m.attr("__version__") = "0.1.0";
  m.def("check", &run_check, py::arg("doc"), py::arg("object"),
        "Validate a named object or certificate in a workspace JSON document.");
  m.def("find_reduced_system", &run_find_reduced, py::arg("doc"), py::arg("coring"),
        py::arg("trials") = 20, py::arg("coeff_bound") = 1 << 16, py::arg("seed") = 1,
        py::arg("e_candidates") = std::vector<std::string>{},
        "Search for a reduced Frobenius system on a coring.");
  m.def("find_frobenius_extension", &run_find_extension, py::arg("doc"), py::arg("extension"),
        py::arg("trials") = 20, py::arg("coeff_bound") = 1 << 16, py::arg("seed") = 1,
        "Search for Frobenius data (E, beta) on a ring extension.");
  m.def("build_tower", &run_tower, py::arg("doc"), py::arg("coring"), py::arg("levels"),
        py::arg("budget") = 4096, py::arg("seed") = 1, py::arg("trials") = 20,
        "Build and verify the tower over a coring.");
  m.def("solve", &run_solve, py::arg("field"), py::arg("matrix"), py::arg("rhs"),
        "Exact linear solve; field is \"Q\" or a prime p as a string.");
}
