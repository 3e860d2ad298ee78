#ifndef CORALG_WORKSPACE_HPP
#define CORALG_WORKSPACE_HPP

#include <map>

#include <json.hpp>

#include "coralg/tower.hpp"

namespace coralg {

/// One self-contained JSON document: named algebras, extensions, bimodules,
/// corings and certificates, all over one field. Every object is validated on
/// load; cross-references must resolve.
struct Workspace {
  Field field = Field::rationals();
  std::map<std::string, Algebra> algebras;
  std::map<std::string, RingMap> extensions;
  std::map<std::string, Bimodule> bimodules;

  struct CoringEntry {
    Coring coring;
    std::optional<SweedlerCoring> sweedler;  // present when built as sweedler_of
  };
  std::map<std::string, CoringEntry> corings;

  struct Certificate {
    std::string type;    // "reduced_system" | "frobenius_system" | "extension_data"
    std::string target;  // coring name (systems) or extension name (data)
    Matrix map;          // gamma / pi / E
    Vector element;      // e / beta

    Certificate() : map(Field::rationals(), 0, 0), element(Field::rationals(), 0, 1) {}
  };
  std::map<std::string, Certificate> certificates;
};

/// Thrown on malformed JSON or unresolved references (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Workspace load_workspace(const std::string& json_text);
Workspace load_workspace_file(const std::string& path);

// JSON encoding: scalars as strings ("p/q" or "p"), matrices as row-major
// nested arrays, vectors as flat arrays. Keys are emitted sorted.
nlohmann::json scalar_to_json(const Scalar& s);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vector_to_json(const Vector& v);
Matrix matrix_from_json(const Field& f, const nlohmann::json& j, const std::string& where);
Vector vector_from_json(const Field& f, const nlohmann::json& j, const std::string& where);
nlohmann::json report_to_json(const Report& r);

/// Outcome of one CLI-level command: stable exit code + JSON document.
/// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
/// 3 not found within search, 4 certified negative, 5 dimension budget.
struct ToolResult {
  int exit_code = 0;
  nlohmann::json output;
};

ToolResult cmd_check(const std::string& json_text, const std::string& object_name);

struct FindOptions {
  int trials = 20;
  long long coeff_bound = 1 << 16;
  std::uint64_t seed = 1;
  std::vector<std::string> e_candidates;  // comma-separated coordinate strings
};

ToolResult cmd_find_frobenius(const std::string& json_text, const std::string& coring_name,
                              const FindOptions& opts);

ToolResult cmd_tower(const std::string& json_text, const std::string& coring_name, int levels,
                     int budget, const FindOptions& opts);

}  // namespace coralg

#endif
