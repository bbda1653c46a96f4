#pragma once
// Pipeline orchestration and deterministic reports (JSON and plain text).

#include <string>

#include "json.hpp"
#include "jc/applications.hpp"
#include "jc/problem.hpp"

namespace jc {

constexpr const char* kVersion = "1.0.0";

enum class Command { Analyze, Decompose, Verify, Tree, Polar, Semiroot };
Command parse_command(const std::string& s);
std::string command_name(Command c);

struct RunResult {
  nlohmann::ordered_json report;
  std::string text;  // human-readable summary
  std::string dot;   // DOT of G(Z) and of the ramified tree
  int status = 0;    // exit status: 0, 3, 4 or 5
};

// Runs one command. InputError, AssumptionError, MathError and
// InternalError propagate to the caller.
RunResult run_pipeline(const ProblemSpec& spec, Command cmd);

// Exit status for an exception escaping run_pipeline.
int exit_code_for(const std::exception& e);

// Reusable pieces of the report.
nlohmann::ordered_json analysis_json(const Analysis& a, const CheckLog& log);
nlohmann::ordered_json divisor_json(const Analysis& a, const DivisorReport& R);
nlohmann::ordered_json checks_json(const CheckLog& log);
std::string divisor_label(int tree_id);

}  // namespace jc
