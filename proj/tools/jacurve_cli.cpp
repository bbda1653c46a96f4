// jacurve: command-line front end for the jacobian curve analysis library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jc/report.hpp"

namespace {

bool write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "jacurve: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian curves of pairs of plane foliations"};
  app.set_version_flag("--version", jc::kVersion);
  app.require_subcommand(1, 1);

  std::string input, dot_path, json_path;
  std::uint64_t seed = 0;
  int truncation = 0;
  bool quiet = false;

  const char* commands[][2] = {
      {"analyze", "full per-divisor analysis of the jacobian curve"},
      {"decompose", "packet decomposition of the jacobian curve"},
      {"verify", "analysis plus the expectations stored in the input"},
      {"tree", "Kuo-Parusinski tree model of two hamiltonian foliations"},
      {"polar", "generic polar of a foliation"},
      {"semiroot", "jacobian of a branch and one of its semiroots"},
  };
  for (auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--input,-i", input, "problem document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "seed for randomized choices (overrides the document)");
    sub->add_option("--truncation", truncation, "separatrix truncation order (overrides the document)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--dot", dot_path, "write DOT of the dual graphs to FILE");
    sub->add_option("--json", json_path, "write the JSON report to FILE ('-' for stdout)");
    sub->add_flag("--quiet,-q", quiet, "suppress the text summary");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    jc::Command cmd = jc::parse_command(sub->get_name());
    jc::ProblemSpec spec = jc::load_problem(input);
    if (sub->count("--seed")) spec.options.seed = seed;
    if (sub->count("--truncation")) spec.options.truncation = truncation;
    jc::RunResult r = jc::run_pipeline(spec, cmd);
    if (!quiet && json_path != "-") std::cout << r.text;
    if (!json_path.empty() && !write_file(json_path, r.report.dump(2) + "\n")) return 2;
    if (!dot_path.empty() && !write_file(dot_path, r.dot)) return 2;
    return r.status;
  } catch (const std::exception& e) {
    std::cerr << "jacurve: " << e.what() << "\n";
    return jc::exit_code_for(e);
  }
}
