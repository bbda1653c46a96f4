#pragma once
// Problem documents: a JSON description of two foliations plus options, the
// data of the specialized commands and optional expected values.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "jc/foliation.hpp"

namespace jc {

struct FoliationSpec {
  std::string name;
  FoliationKind kind = FoliationKind::OneForm;
  std::optional<BiPoly> A, B;  // one_form
  std::optional<BiPoly> f;     // hamiltonian; product of the branches when absent
  std::vector<Branch> branches;
  std::vector<Scalar> weights;  // logarithmic
  // truncation > 0: separatrices are handed on modulo t^truncation.
  FoliationModel build(int truncation = 0) const;
};

struct SemirootSpec {
  Branch f, h;
  int k = 0;
};

struct PolarSpec {
  std::optional<std::pair<Scalar, Scalar>> direction;  // (a, b): a dy - b dx
  int attempts = 16;
};

struct Expectations {
  std::optional<BiPoly> J;
  std::optional<long> m0J;
  std::optional<bool> x_tangency_condition;
  // divisor label ("E1", "E2", ... in tree order) -> Delta per point
  std::map<std::string, std::vector<Scalar>> delta;
  bool empty() const { return !J && !m0J && !x_tangency_condition && delta.empty(); }
};

struct ProblemOptions {
  std::uint64_t seed = 1;
  int truncation = 0;         // > 0: branches known modulo t^truncation
  unsigned ramification = 0;  // 0: minimal
  std::vector<std::string> checks{"all"};
};

struct ProblemSpec {
  std::string name;
  std::optional<FoliationSpec> F, G;
  std::optional<SemirootSpec> semiroot;
  PolarSpec polar;
  ProblemOptions options;
  Expectations expect;
};

constexpr const char* kProblemSchema = "jacurve-problem/1";

// Validates and normalizes (branches sorted by label, weights permuted
// along, scalars reduced). Errors are InputError("line L: /json/pointer: ...").
ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);
// Canonical document; parse_problem(emit) reproduces the same document.
nlohmann::ordered_json problem_to_json(const ProblemSpec& p);

nlohmann::ordered_json branch_to_json(const Branch& b);

}  // namespace jc
