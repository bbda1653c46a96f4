#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "jc/report.hpp"
#include "test_util.hpp"

using namespace jc;
using namespace jc::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(JACURVE_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/jacurve_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("problem documents parse and normalize") {
  ProblemSpec p = load_fixture("ce_me.json");
  REQUIRE(p.F);
  REQUIRE(p.G);
  CHECK(p.F->branches.size() == 4);
  CHECK(p.G->branches.size() == 3);
  CHECK(p.F->weights == scalars({1, 1, 1, 3}));
  CHECK(p.G->weights == scalars({3, 3, 1}));
  CHECK(p.options.seed == 1);
}

TEST_CASE("problem documents round-trip") {
  for (const char* name : {"ce_me.json", "x_cono_tg.json", "kp_d1_f2.json", "polar_cusp.json", "semiroot_k1.json"}) {
    ProblemSpec p = load_fixture(name);
    auto j = problem_to_json(p);
    CHECK(problem_to_json(parse_problem(j.dump())) == j);
  }
}

TEST_CASE("document errors are input errors with a location") {
  CHECK_THROWS_AS(parse_problem(""), InputError);
  CHECK_THROWS_AS(parse_problem("{}"), InputError);
  CHECK_THROWS_AS(parse_problem("[1, 2]"), InputError);
  try {
    parse_problem("{\n  \"schema\": \"jacurve-problem/1\",\n  \"bogus\": 1\n}");
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    std::string m = e.what();
    CHECK(m.find("line") != std::string::npos);
    CHECK(m.find("/bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem(R"({"schema":"jacurve-problem/1","F":{"kind":"logarithmic","branches":[{"smooth":[1]}],"weights":[1,2]}})"),
                  InputError);
}

TEST_CASE("commands parse") {
  CHECK(command_name(parse_command("analyze")) == std::string("analyze"));
  CHECK(command_name(parse_command("polar")) == std::string("polar"));
  CHECK_THROWS_AS(parse_command("frobnicate"), InputError);
}

TEST_CASE("pipeline reports are deterministic") {
  ProblemSpec p = load_fixture("ce_me.json");
  RunResult a = run_pipeline(p, Command::Analyze), b = run_pipeline(p, Command::Analyze);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["schema"] == "jacurve-report/1");
  CHECK(a.status == 0);
  CHECK(a.dot.find("graph") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(InputError("x")) == 2);
  CHECK(exit_code_for(MathError("truncation too short")) == 2);
  CHECK(exit_code_for(MathError("dicritical divisor")) == 3);
  CHECK(exit_code_for(AssumptionError("x")) == 3);
  CHECK(exit_code_for(InternalError("x")) == 5);
}

TEST_CASE("cli: analyze, verify, tree, polar and semiroot succeed on fixtures") {
  CHECK(run_cli("analyze -i " + fixture("ce_me.json") + " -q").code == 0);
  Run v = run_cli("verify -i " + fixture("x_cono_tg.json"));
  CHECK(v.code == 0);
  CHECK(v.out.find("status 0") != std::string::npos);
  CHECK(run_cli("tree -i " + fixture("kp_d1_f2.json") + " -q").code == 0);
  CHECK(run_cli("polar -i " + fixture("polar_cusp.json") + " -q").code == 0);
  CHECK(run_cli("semiroot -i " + fixture("semiroot_k1.json") + " -q").code == 0);
  CHECK(run_cli("decompose -i " + fixture("sum_mult_counterexample.json") + " -q").code == 0);
}

TEST_CASE("cli: json report contents") {
  Run r = run_cli("analyze -i " + fixture("ce_me.json") + " --json -");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["seed"] == 1);
  bool found = false;
  for (auto& d : j["analysis"]["divisors"])
    if (d["label"] == "E2") {
      found = true;
      std::vector<std::string> ds;
      for (auto& P : d["points"]) ds.push_back(P["Delta"]);
      CHECK(ds == std::vector<std::string>{"-2/11", "0", "3/11"});
    }
  CHECK(found);
}

TEST_CASE("cli: byte-identical output across runs") {
  std::string a = "/tmp/jacurve_test_a.json", b = "/tmp/jacurve_test_b.json";
  REQUIRE(run_cli("polar -i " + fixture("polar_cusp.json") + " -q --json " + a).code == 0);
  REQUIRE(run_cli("polar -i " + fixture("polar_cusp.json") + " -q --json " + b).code == 0);
  std::stringstream sa, sb;
  sa << std::ifstream(a).rdbuf();
  sb << std::ifstream(b).rdbuf();
  CHECK_FALSE(sa.str().empty());
  CHECK(sa.str() == sb.str());
}

TEST_CASE("cli: error exit codes") {
  CHECK(run_cli("analyze -i " + write_temp("empty", "")).code == 2);
  CHECK(run_cli("analyze -i " + write_temp("bad", "{\"schema\": 3}")).code == 2);
  CHECK(run_cli("analyze -i " + fixture("semiroot_k1.json")).code == 2);
  CHECK(run_cli("verify -i " + fixture("ce_me.json")).code == 2);
  CHECK(run_cli("frobnicate -i " + fixture("ce_me.json")).code == 2);
  CHECK(run_cli("analyze -i /nonexistent.json").code == 2);
  CHECK(run_cli("analyze -i " + fixture("ce_me.json") + " --truncation 2").code == 2);
  Run v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find(kVersion) != std::string::npos);
}

TEST_CASE("cli: failed expectations exit with a theorem failure") {
  std::ifstream in(fixture("ce_me.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.rfind('}');
  text.insert(pos, ",\n  \"expect\": {\"x_tangency_condition\": false}\n");
  Run r = run_cli("verify -i " + write_temp("wrong_expect", text));
  CHECK(r.code == 4);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: failures under a withdrawn hypothesis report as assumption violations") {
  std::ifstream in(fixture("x_cono_tg.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::string from = "\"x_tangency_condition\": false";
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), "\"x_tangency_condition\": true");
  CHECK(run_cli("verify -i " + write_temp("downgraded", text)).code == 3);
}
