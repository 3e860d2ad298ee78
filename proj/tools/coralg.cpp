// coralg: batch front end for exact coring computations.
//
// Exit codes are part of the contract: 0 pass, 1 verification failure,
// 2 usage or parse error, 3 not found within search, 4 certified negative,
// 5 dimension budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coralg/workspace.hpp"

namespace {

std::string read_file_or_exit(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open file: " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_human(const coralg::ToolResult& result) {
  const auto& out = result.output;
  if (out.contains("error")) {
    std::cout << "error [" << out["error"].get<std::string>() << "]";
    if (out.contains("detail")) std::cout << ": " << out["detail"].get<std::string>();
    std::cout << "\n";
    return;
  }
  if (out.contains("clauses")) {
    for (const auto& clause : out["clauses"]) {
      std::cout << (clause["ok"].get<bool>() ? "  ok   " : "  FAIL ")
                << clause["clause"].get<std::string>();
      if (clause.contains("detail")) std::cout << "  (" << clause["detail"].get<std::string>() << ")";
      std::cout << "\n";
    }
  }
  if (out.contains("pass"))
    std::cout << (out["pass"].get<bool>() ? "pass" : "fail") << "\n";
  if (out.contains("status")) std::cout << "status: " << out["status"].get<std::string>() << "\n";
  if (out.contains("obstruction"))
    std::cout << "obstruction: " << out["obstruction"].get<std::string>() << "\n";
  if (out.contains("levels")) {
    for (const auto& level : out["levels"]) {
      std::cout << "level " << level["k"].get<int>() << ": dim " << level["dim"].get<int>();
      bool ok = true;
      for (const auto& [gate, val] : level["verified"].items())
        if (!val.get<bool>()) ok = false;
      std::cout << "  gates " << (ok ? "pass" : "FAIL");
      if (!level["index"].is_null())
        std::cout << "  index (" << level["index"][0].get<std::string>() << ":"
                  << level["index"][1].get<std::string>() << ")";
      std::cout << "\n";
    }
    if (out.contains("index_alternation"))
      std::cout << "index alternation: " << (out["index_alternation"].get<bool>() ? "ok" : "FAIL")
                << "\n";
  }
}

void emit(const coralg::ToolResult& result, bool json_only) {
  if (json_only)
    std::cout << result.output.dump(2) << "\n";
  else
    print_human(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact corings, Frobenius systems and towers"};
  app.require_subcommand(1);
  bool json_only = false;
  app.add_flag("--json", json_only, "emit machine-readable JSON only");

  std::string path, object_name;
  coralg::FindOptions opts;

  auto* check = app.add_subcommand("check", "validate an object or certificate");
  check->add_option("file", path)->required();
  check->add_option("object", object_name)->required();

  auto* find = app.add_subcommand("find-frobenius", "search for a reduced Frobenius system");
  find->add_option("file", path)->required();
  find->add_option("coring", object_name)->required();
  find->add_option("--seed", opts.seed);
  find->add_option("--trials", opts.trials);
  find->add_option("--coeff-bound", opts.coeff_bound);
  find->add_option("--e-candidate", opts.e_candidates,
                   "extra candidate for e, comma-separated coordinates");

  int levels = 1;
  int budget = 4096;
  auto* tower = app.add_subcommand("tower", "build and verify the tower over a coring");
  tower->add_option("file", path)->required();
  tower->add_option("coring", object_name)->required();
  tower->add_option("--levels", levels)->required();
  tower->add_option("--budget", budget);
  tower->add_option("--seed", opts.seed);
  tower->add_option("--trials", opts.trials);
  tower->add_option("--coeff-bound", opts.coeff_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string text = read_file_or_exit(path);
  coralg::ToolResult result;
  try {
    if (check->parsed()) {
      result = coralg::cmd_check(text, object_name);
    } else if (find->parsed()) {
      result = coralg::cmd_find_frobenius(text, object_name, opts);
      // The certificate itself is the payload; always emit it.
      emit(result, true);
      return result.exit_code;
    } else {
      result = coralg::cmd_tower(text, object_name, levels, budget, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  emit(result, json_only);
  return result.exit_code;
}
