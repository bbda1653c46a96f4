#include "jc/problem.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "jc/applications.hpp"
#include "jc/expr.hpp"

namespace jc {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

// Forward iterator over the document that counts the newlines consumed, so
// that SAX events can be attributed to a line.
struct CountingIt {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;
  const char* p = nullptr;
  int* line = nullptr;
  reference operator*() const { return *p; }
  CountingIt& operator++() {
    if (*p == '\n') ++*line;
    ++p;
    return *this;
  }
  CountingIt operator++(int) {
    CountingIt t = *this;
    ++*this;
    return t;
  }
  bool operator==(const CountingIt& o) const { return p == o.p; }
  bool operator!=(const CountingIt& o) const { return p != o.p; }
};

std::string escape_token(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '~')
      r += "~0";
    else if (c == '/')
      r += "~1";
    else
      r += c;
  }
  return r;
}

// Builds the DOM and records, per JSON pointer, the line where the member
// or element starts.
class LineSax {
 public:
  LineSax(json& j, int* line) : dom_(j, true), line_(line) {}
  std::map<std::string, int> lines;

  bool null() { return value(), dom_.null(); }
  bool boolean(bool v) { return value(), dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return value(), dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return value(), dom_.number_unsigned(v); }
  bool number_float(json::number_float_t v, const std::string& s) {
    return value(), dom_.number_float(v, s);
  }
  bool string(std::string& s) { return value(), dom_.string(s); }
  bool binary(json::binary_t& b) { return value(), dom_.binary(b); }
  bool start_object(std::size_t n) {
    mark();
    stack_.push_back(Frame{false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(std::string& k) {
    stack_.back().key = k;
    mark();
    return dom_.key(k);
  }
  bool end_object() {
    stack_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    mark();
    stack_.push_back(Frame{true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    stack_.pop_back();
    advance();
    return dom_.end_array();
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    std::string msg = ex.what();
    auto pos = msg.find("] ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw InputError("line " + std::to_string(*line_) + ": JSON syntax error: " + msg);
  }

 private:
  struct Frame {
    bool array;
    size_t index;
    std::string key;
  };
  std::string pointer() const {
    std::string s;
    for (auto& f : stack_) s += "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
    return s;
  }
  void mark() { lines.emplace(pointer(), *line_); }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  void value() {
    mark();
    advance();
  }
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  int* line_;
  std::vector<Frame> stack_;
};

class Reader {
 public:
  explicit Reader(std::map<std::string, int> lines) : lines_(std::move(lines)) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    std::string p = ptr;
    int line = 1;
    for (;;) {
      auto it = lines_.find(p);
      if (it != lines_.end()) {
        line = it->second;
        break;
      }
      if (p.empty()) break;
      p = p.substr(0, p.rfind('/'));
    }
    throw InputError("line " + std::to_string(line) + ": " + (ptr.empty() ? "/" : ptr) + ": " + msg);
  }

  void keys(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    for (auto& [k, v] : j.items()) {
      bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; });
      if (!ok) fail(ptr + "/" + escape_token(k), "unknown member \"" + k + "\"");
    }
  }

  std::string str(const json& j, const std::string& ptr) const {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
  }

  long integer(const json& j, const std::string& ptr, long lo, long hi) const {
    if (!j.is_number_integer()) fail(ptr, "expected an integer");
    long v = j.get<long>();
    if (v < lo || v > hi)
      fail(ptr, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
    return v;
  }

  Scalar scalar(const json& j, const std::string& ptr) const {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) fail(ptr, "expected a scalar (integer or expression string)");
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const InputError& e) {
      fail(ptr, e.what());
    }
  }

  BiPoly poly(const json& j, const std::string& ptr) const {
    if (j.is_string()) {
      try {
        return parse_poly(j.get<std::string>());
      } catch (const InputError& e) {
        fail(ptr, e.what());
      }
    }
    if (!j.is_array()) fail(ptr, "expected an expression string or a table of [i, j, c] terms");
    BiPoly p;
    for (size_t k = 0; k < j.size(); ++k) {
      std::string pk = ptr + "/" + std::to_string(k);
      const json& t = j[k];
      if (!t.is_array() || t.size() != 3) fail(pk, "expected [i, j, c]");
      long a = integer(t[0], pk + "/0", 0, 1000), b = integer(t[1], pk + "/1", 0, 1000);
      p.add_term(static_cast<int>(a), static_cast<int>(b), scalar(t[2], pk + "/2"));
    }
    return p;
  }

  Branch branch(const json& j, const std::string& ptr, const std::string& default_label) const {
    keys(j, ptr, {"label", "n", "terms", "smooth", "truncation"});
    std::string label = j.contains("label") ? str(j["label"], ptr + "/label") : default_label;
    if (label.empty()) fail(ptr + "/label", "empty label");
    long n = j.contains("n") ? integer(j["n"], ptr + "/n", 1, 64) : 1;
    long T = j.contains("truncation") ? integer(j["truncation"], ptr + "/truncation", 0, 100000) : 0;
    if (j.contains("terms") == j.contains("smooth")) fail(ptr, "give exactly one of \"terms\" and \"smooth\"");
    std::vector<std::pair<int, Scalar>> terms;
    if (j.contains("smooth")) {
      if (n != 1) fail(ptr + "/n", "\"smooth\" branches have n = 1");
      const json& s = j["smooth"];
      if (!s.is_array()) fail(ptr + "/smooth", "expected an array of coefficients of x, x^2, ...");
      for (size_t k = 0; k < s.size(); ++k)
        terms.emplace_back(static_cast<int>(k) + 1, scalar(s[k], ptr + "/smooth/" + std::to_string(k)));
    } else {
      const json& s = j["terms"];
      if (!s.is_array()) fail(ptr + "/terms", "expected an array of [exponent, coefficient]");
      for (size_t k = 0; k < s.size(); ++k) {
        std::string pk = ptr + "/terms/" + std::to_string(k);
        if (!s[k].is_array() || s[k].size() != 2) fail(pk, "expected [exponent, coefficient]");
        terms.emplace_back(static_cast<int>(integer(s[k][0], pk + "/0", 1, 100000)),
                           scalar(s[k][1], pk + "/1"));
      }
    }
    try {
      return Branch(static_cast<unsigned>(n), std::move(terms), static_cast<int>(T), label);
    } catch (const InputError& e) {
      fail(ptr, e.what());
    }
  }

  FoliationSpec foliation(const json& j, const std::string& ptr, const std::string& side) const {
    keys(j, ptr, {"kind", "name", "A", "B", "f", "branches", "weights"});
    FoliationSpec F;
    F.name = j.contains("name") ? str(j["name"], ptr + "/name") : side;
    if (!j.contains("kind")) fail(ptr, "missing \"kind\"");
    std::string kind = str(j["kind"], ptr + "/kind");
    if (kind == "one_form")
      F.kind = FoliationKind::OneForm;
    else if (kind == "hamiltonian")
      F.kind = FoliationKind::Hamiltonian;
    else if (kind == "logarithmic")
      F.kind = FoliationKind::Logarithmic;
    else
      fail(ptr + "/kind", "kind must be one_form, hamiltonian or logarithmic");
    if (!j.contains("branches") || !j["branches"].is_array() || j["branches"].empty())
      fail(ptr + (j.contains("branches") ? "/branches" : ""), "a nonempty \"branches\" array is required");
    std::string prefix = side == "F" ? "C" : "D";
    for (size_t k = 0; k < j["branches"].size(); ++k)
      F.branches.push_back(branch(j["branches"][k], ptr + "/branches/" + std::to_string(k),
                                  prefix + std::to_string(k + 1)));
    auto need = [&](const char* key, bool wanted) {
      if (j.contains(key) != wanted)
        fail(ptr + (wanted ? "" : "/" + std::string(key)),
             std::string(wanted ? "missing" : "unexpected") + " \"" + key + "\" for kind " + kind);
    };
    need("A", F.kind == FoliationKind::OneForm);
    need("B", F.kind == FoliationKind::OneForm);
    need("weights", F.kind == FoliationKind::Logarithmic);
    if (F.kind != FoliationKind::Hamiltonian) need("f", false);
    if (F.kind == FoliationKind::OneForm) {
      F.A = poly(j["A"], ptr + "/A");
      F.B = poly(j["B"], ptr + "/B");
    }
    if (j.contains("f")) F.f = poly(j["f"], ptr + "/f");
    if (F.kind == FoliationKind::Logarithmic) {
      const json& w = j["weights"];
      if (!w.is_array() || w.size() != F.branches.size())
        fail(ptr + "/weights", "one weight per branch is required");
      for (size_t k = 0; k < w.size(); ++k) {
        Scalar s = scalar(w[k], ptr + "/weights/" + std::to_string(k));
        if (s.is_zero()) fail(ptr + "/weights/" + std::to_string(k), "weights must be nonzero");
        F.weights.push_back(s);
      }
    }
    std::set<std::string> seen;
    for (size_t k = 0; k < F.branches.size(); ++k)
      if (!seen.insert(F.branches[k].label()).second)
        fail(ptr + "/branches/" + std::to_string(k), "duplicate label " + F.branches[k].label());
    // Canonical order: by label, weights permuted along.
    std::vector<size_t> idx(F.branches.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return F.branches[a].label() < F.branches[b].label(); });
    std::vector<Branch> br;
    std::vector<Scalar> w;
    for (size_t k : idx) {
      br.push_back(F.branches[k]);
      if (!F.weights.empty()) w.push_back(F.weights[k]);
    }
    F.branches = std::move(br);
    F.weights = std::move(w);
    return F;
  }

 private:
  std::map<std::string, int> lines_;
};

ojson scalar_json(const Scalar& s) { return s.str(); }

Branch truncate_branch(const Branch& b, int T) {
  if (T <= 0 || (!b.exact() && b.truncation() <= T)) return b;
  std::vector<std::pair<int, Scalar>> terms;
  for (auto& [j, c] : b.terms())
    if (j < T) terms.push_back({j, c});
  return Branch(b.n(), std::move(terms), T, b.label());
}

}  // namespace

FoliationModel FoliationSpec::build(int truncation) const {
  FoliationModel M;
  switch (kind) {
    case FoliationKind::OneForm: {
      OneForm w;
      w.A = *A;
      w.B = *B;
      M = explicit_model(w, branches, name);
      break;
    }
    case FoliationKind::Hamiltonian:
      M = hamiltonian_model(f ? *f : product_equation(branches), branches, name);
      break;
    case FoliationKind::Logarithmic:
      M = logarithmic_model(branches, weights, name);
      break;
  }
  // The form is built from the exact data; the analysis then only sees the
  // separatrices modulo t^truncation.
  for (auto& b : M.separatrices) b = truncate_branch(b, truncation);
  return M;
}

ProblemSpec parse_problem(const std::string& text) {
  json j;
  int line = 1;
  LineSax sax(j, &line);
  CountingIt first{text.data(), &line}, last{text.data() + text.size(), &line};
  json::sax_parse(first, last, &sax);
  Reader r(sax.lines);
  r.keys(j, "", {"schema", "name", "F", "G", "options", "polar", "semiroot", "expect"});
  ProblemSpec p;
  if (j.contains("schema") && r.str(j["schema"], "/schema") != kProblemSchema)
    r.fail("/schema", std::string("unsupported schema, expected ") + kProblemSchema);
  p.name = j.contains("name") ? r.str(j["name"], "/name") : "problem";
  if (j.contains("F")) p.F = r.foliation(j["F"], "/F", "F");
  if (j.contains("G")) p.G = r.foliation(j["G"], "/G", "G");
  if (p.G && !p.F) r.fail("/G", "\"G\" given without \"F\"");
  if (j.contains("options")) {
    const json& o = j["options"];
    r.keys(o, "/options", {"seed", "truncation", "ramification", "checks"});
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) r.fail("/options/seed", "expected a non-negative integer");
      p.options.seed = o["seed"].get<std::uint64_t>();
    }
    if (o.contains("truncation"))
      p.options.truncation = static_cast<int>(r.integer(o["truncation"], "/options/truncation", 0, 100000));
    if (o.contains("ramification"))
      p.options.ramification = static_cast<unsigned>(r.integer(o["ramification"], "/options/ramification", 0, 720));
    if (o.contains("checks")) {
      const json& c = o["checks"];
      if (!c.is_array() || c.empty()) r.fail("/options/checks", "expected a nonempty array of check names");
      p.options.checks.clear();
      for (size_t k = 0; k < c.size(); ++k)
        p.options.checks.push_back(r.str(c[k], "/options/checks/" + std::to_string(k)));
      std::sort(p.options.checks.begin(), p.options.checks.end());
      p.options.checks.erase(std::unique(p.options.checks.begin(), p.options.checks.end()),
                             p.options.checks.end());
    }
  }
  if (j.contains("polar")) {
    const json& o = j["polar"];
    r.keys(o, "/polar", {"direction", "attempts"});
    if (o.contains("direction")) {
      const json& d = o["direction"];
      if (!d.is_array() || d.size() != 2) r.fail("/polar/direction", "expected [a, b]");
      Scalar a = r.scalar(d[0], "/polar/direction/0"), b = r.scalar(d[1], "/polar/direction/1");
      if (a.is_zero()) r.fail("/polar/direction/0", "a must be nonzero");
      p.polar.direction = {a, b};
    }
    if (o.contains("attempts"))
      p.polar.attempts = static_cast<int>(r.integer(o["attempts"], "/polar/attempts", 1, 1000));
  }
  if (j.contains("semiroot")) {
    const json& o = j["semiroot"];
    r.keys(o, "/semiroot", {"f", "h", "k"});
    for (const char* key : {"f", "h", "k"})
      if (!o.contains(key)) r.fail("/semiroot", std::string("missing \"") + key + "\"");
    SemirootSpec s{r.branch(o["f"], "/semiroot/f", "f"), r.branch(o["h"], "/semiroot/h", "h"),
                   static_cast<int>(r.integer(o["k"], "/semiroot/k", 0, 64))};
    p.semiroot = std::move(s);
  }
  if (j.contains("expect")) {
    const json& o = j["expect"];
    r.keys(o, "/expect", {"J", "m0J", "x_tangency_condition", "delta"});
    if (o.contains("J")) p.expect.J = r.poly(o["J"], "/expect/J");
    if (o.contains("m0J")) p.expect.m0J = r.integer(o["m0J"], "/expect/m0J", 0, 1000000);
    if (o.contains("x_tangency_condition")) {
      if (!o["x_tangency_condition"].is_boolean())
        r.fail("/expect/x_tangency_condition", "expected a boolean");
      p.expect.x_tangency_condition = o["x_tangency_condition"].get<bool>();
    }
    if (o.contains("delta")) {
      const json& d = o["delta"];
      if (!d.is_object()) r.fail("/expect/delta", "expected an object divisor -> [Delta, ...]");
      for (auto& [k, v] : d.items()) {
        std::string pk = "/expect/delta/" + escape_token(k);
        if (!v.is_array()) r.fail(pk, "expected an array of scalars");
        std::vector<Scalar> vals;
        for (size_t i = 0; i < v.size(); ++i) vals.push_back(r.scalar(v[i], pk + "/" + std::to_string(i)));
        p.expect.delta[k] = std::move(vals);
      }
    }
  }
  if (!p.F && !p.semiroot) r.fail("", "the document declares neither foliations nor semiroot data");
  return p;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ojson branch_to_json(const Branch& b) {
  ojson o;
  o["label"] = b.label();
  o["n"] = b.n();
  ojson t = ojson::array();
  for (auto& [j, c] : b.terms()) t.push_back(ojson::array({j, scalar_json(c)}));
  o["terms"] = t;
  o["truncation"] = b.truncation();
  return o;
}

namespace {

ojson foliation_json(const FoliationSpec& F) {
  ojson o;
  o["kind"] = F.kind == FoliationKind::OneForm      ? "one_form"
              : F.kind == FoliationKind::Hamiltonian ? "hamiltonian"
                                                     : "logarithmic";
  o["name"] = F.name;
  if (F.A) o["A"] = F.A->str();
  if (F.B) o["B"] = F.B->str();
  if (F.f) o["f"] = F.f->str();
  ojson br = ojson::array();
  for (auto& b : F.branches) br.push_back(branch_to_json(b));
  o["branches"] = br;
  if (F.kind == FoliationKind::Logarithmic) {
    ojson w = ojson::array();
    for (auto& s : F.weights) w.push_back(scalar_json(s));
    o["weights"] = w;
  }
  return o;
}

}  // namespace

ojson problem_to_json(const ProblemSpec& p) {
  ojson o;
  o["schema"] = kProblemSchema;
  o["name"] = p.name;
  if (p.F) o["F"] = foliation_json(*p.F);
  if (p.G) o["G"] = foliation_json(*p.G);
  ojson opt;
  opt["seed"] = p.options.seed;
  opt["truncation"] = p.options.truncation;
  opt["ramification"] = p.options.ramification;
  opt["checks"] = p.options.checks;
  o["options"] = opt;
  ojson pol;
  if (p.polar.direction)
    pol["direction"] = ojson::array({scalar_json(p.polar.direction->first), scalar_json(p.polar.direction->second)});
  pol["attempts"] = p.polar.attempts;
  o["polar"] = pol;
  if (p.semiroot) {
    ojson s;
    s["f"] = branch_to_json(p.semiroot->f);
    s["h"] = branch_to_json(p.semiroot->h);
    s["k"] = p.semiroot->k;
    o["semiroot"] = s;
  }
  if (!p.expect.empty()) {
    ojson e;
    if (p.expect.J) e["J"] = p.expect.J->str();
    if (p.expect.m0J) e["m0J"] = *p.expect.m0J;
    if (p.expect.x_tangency_condition) e["x_tangency_condition"] = *p.expect.x_tangency_condition;
    if (!p.expect.delta.empty()) {
      ojson d;
      for (auto& [k, v] : p.expect.delta) {
        ojson a = ojson::array();
        for (auto& s : v) a.push_back(scalar_json(s));
        d[k] = a;
      }
      e["delta"] = d;
    }
    o["expect"] = e;
  }
  return o;
}

}  // namespace jc
