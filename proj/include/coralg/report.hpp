#ifndef CORALG_REPORT_HPP
#define CORALG_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace coralg {

/// One verified clause of a construction or certificate check.
struct ClauseResult {
  std::string clause;
  bool ok = false;
  std::string detail;
};

/// Pass/fail verdict with per-clause breakdown. Verifiers are report-based:
/// they never throw on a mathematical failure, only on shape errors.
struct Report {
  bool pass = true;
  std::vector<ClauseResult> clauses;

  void record(std::string clause, bool ok, std::string detail = std::string()) {
    if (!ok) pass = false;
    clauses.push_back(ClauseResult{std::move(clause), ok, std::move(detail)});
  }

  const ClauseResult* first_failure() const {
    for (const auto& c : clauses)
      if (!c.ok) return &c;
    return nullptr;
  }

  std::string summary() const {
    if (pass) return "pass";
    const ClauseResult* f = first_failure();
    return f->clause + (f->detail.empty() ? "" : ": " + f->detail);
  }
};

/// Thrown by constructors (make_algebra, make_bimodule, make_coring, ...)
/// when a structural axiom fails. `code` is a stable machine-readable tag,
/// e.g. "NotAssociative"; `detail` names the first failing basis indices.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code_, std::string detail_)
      : std::runtime_error(code_ + ": " + detail_),
        code(std::move(code_)),
        detail(std::move(detail_)) {}

  const std::string code;
  const std::string detail;
};

}  // namespace coralg

#endif
