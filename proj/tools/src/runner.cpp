#include "semidirect/cli/runner.hpp"

#include <sstream>

namespace semidirect::cli {

namespace {

struct Product {
  SemidirectAlgebra p;
  std::optional<Matrix> derivation;  // set for the worked-example builds
};

// Bimodule over a named algebra: a module, or an algebra acting on itself.
struct Acted {
  std::string over;
  const Algebra* algebra = nullptr;
  BimoduleAction action;
};

Json check_json(const Check& c) {
  Json j = {{"name", c.name}, {"holds", c.holds}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

Json map_space_json(const LinearMapSpace& s) {
  return {{"dim", s.dim()}, {"source_dim", s.source_dim}, {"target_dim", s.target_dim}, {"basis", to_json(s.space)}};
}

class Runner {
 public:
  explicit Runner(const InstanceFile& f) : f_(f) {}

  RunResult run() {
    Json jobs = Json::array();
    std::size_t ok = 0, errors = 0, mismatches = 0, expect_failures = 0;
    for (const Job& job : f_.jobs) {
      Json entry = {{"index", job.index}, {"cmd", job.cmd}, {"args", job.args}};
      try {
        Json result = dispatch(job);
        bool mismatch = result.contains("verdict") && result["verdict"] == "MISMATCH";
        std::string failed_key;
        if (job.raw.contains("expect")) failed_key = unmet_expectation(job.raw["expect"], result);
        entry["status"] = mismatch ? "mismatch" : failed_key.empty() ? "ok" : "expectation-failed";
        if (!failed_key.empty()) {
          entry["expectation"] = {{"key", failed_key}, {"expected", job.raw["expect"][failed_key]},
                                  {"actual", result.contains(failed_key) ? result[failed_key] : Json()}};
          ++expect_failures;
        }
        mismatches += mismatch;
        ok += !mismatch && failed_key.empty();
        entry["result"] = std::move(result);
      } catch (const Error& e) {
        entry["status"] = "error";
        entry["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        ++errors;
      }
      jobs.push_back(std::move(entry));
    }
    RunResult r;
    r.exit_code = mismatches ? exit_mismatch : (errors || expect_failures) ? exit_invalid : exit_ok;
    r.report = {{"tool", "semidirect"},
                {"version", version},
                {"jobs", std::move(jobs)},
                {"summary",
                 {{"jobs", f_.jobs.size()},
                  {"ok", ok},
                  {"errors", errors},
                  {"mismatches", mismatches},
                  {"expectation_failures", expect_failures},
                  {"exit_code", r.exit_code}}}};
    return r;
  }

 private:
  static std::string unmet_expectation(const Json& expect, const Json& result) {
    if (!expect.is_object()) fail(ErrorKind::ParseError, "\"expect\" must be an object");
    for (const auto& [key, value] : expect.items())
      if (!result.contains(key) || result[key] != value) return key;
    return "";
  }

  void arity(const Job& job, std::size_t lo, std::size_t hi) const {
    if (job.args.size() < lo || job.args.size() > hi)
      fail(ErrorKind::ShapeMismatch, job.cmd + " takes " + std::to_string(lo) +
                                         (hi > lo ? "-" + std::to_string(hi) : "") + " arguments");
  }

  const Algebra& algebra(const std::string& name) const {
    if (auto it = f_.algebras.find(name); it != f_.algebras.end()) return it->second;
    if (auto it = products_.find(name); it != products_.end()) return it->second.p.total;
    if (auto it = f_.modules.find(name); it != f_.modules.end()) return it->second.module.algebra;
    fail(ErrorKind::UnresolvedReference, "\"" + name + "\" is not an algebra");
  }

  const Product& product(const std::string& name) const {
    auto it = products_.find(name);
    if (it == products_.end()) fail(ErrorKind::UnresolvedReference, "\"" + name + "\" is not a built product");
    return it->second;
  }

  const NamedModule& module(const std::string& name) const {
    auto it = f_.modules.find(name);
    if (it == f_.modules.end()) fail(ErrorKind::UnresolvedReference, "\"" + name + "\" is not a module");
    return it->second;
  }

  Acted acted(const std::string& name) const {
    if (auto it = f_.modules.find(name); it != f_.modules.end())
      return {it->second.over, &f_.algebras.at(it->second.over), it->second.module.action};
    const Algebra& a = algebra(name);
    return {name, &a, regular_action(a)};
  }

  // (A, M) for cohomology jobs: [A] means A acting on itself.
  std::pair<const Algebra*, BimoduleAction> coefficients(const Job& job) const {
    arity(job, 1, 2);
    const Algebra& a = algebra(job.args[0]);
    if (job.args.size() == 1) return {&a, regular_action(a)};
    Acted m = acted(job.args[1]);
    if (m.over != job.args[0] && !(m.algebra == &a))
      fail(ErrorKind::DimensionMismatch, "\"" + job.args[1] + "\" is not a bimodule over \"" + job.args[0] + "\"");
    return {&a, m.action};
  }

  Matrix map_arg(const Job& job, std::size_t rows, std::size_t cols, const char* key = "map") const {
    if (!job.raw.contains(key)) fail(ErrorKind::ParseError, job.cmd + " needs \"" + key + "\"");
    const Json& v = job.raw[key];
    if (v.is_string() && v == "fixture") {
      const Product& p = product(job.args.at(0));
      if (!p.derivation) fail(ErrorKind::UnresolvedReference, "\"" + job.args[0] + "\" carries no fixture map");
      return *p.derivation;
    }
    Matrix m = parse_matrix(v, cols, "/jobs/" + std::to_string(job.index) + "/" + key);
    if (m.rows() != rows) fail(ErrorKind::ShapeMismatch, std::string(key) + " must have " + std::to_string(rows) + " rows");
    return m;
  }

  Json dispatch(const Job& job) {
    if (job.cmd == "validate") return validate(job);
    if (job.cmd == "build") return build(job);
    if (job.cmd == "z1" || job.cmd == "n1") {
      auto [a, m] = coefficients(job);
      return map_space_json(job.cmd == "z1" ? derivation_space(*a, m) : inner_space(*a, m));
    }
    if (job.cmd == "h1") {
      auto [a, m] = coefficients(job);
      LinearMapSpace z = derivation_space(*a, m), b = inner_space(*a, m);
      return {{"h1_dim", quotient_dim(z.space, b.space)}, {"z1_dim", z.dim()}, {"n1_dim", b.dim()}};
    }
    if (job.cmd == "hom") {
      arity(job, 2, 2);
      Acted u = acted(job.args[0]), v = acted(job.args[1]);
      if (u.algebra != v.algebra)
        fail(ErrorKind::DimensionMismatch, "\"" + job.args[0] + "\" and \"" + job.args[1] + "\" are over different algebras");
      return map_space_json(hom_space(u.action, v.action));
    }
    if (job.cmd == "spaces") return spaces(job);
    if (job.cmd == "decompose") return decompose(job);
    if (job.cmd == "inner-witness") return witness(job);
    if (job.cmd == "verify") {
      arity(job, 1, 1);
      if (!job.raw.contains("id") || !job.raw["id"].is_string()) fail(ErrorKind::ParseError, "verify needs \"id\"");
      TheoremReport r = verify(job.raw["id"].get<std::string>(), product(job.args[0]).p);
      Json hyp = Json::array(), claims = Json::array();
      for (const Check& c : r.hypotheses) hyp.push_back(check_json(c));
      for (const Check& c : r.claims) claims.push_back(check_json(c));
      Json out = {{"id", r.theorem_id}, {"verdict", std::string(to_string(r.verdict))}, {"lhs", r.lhs_dim},
                  {"rhs", r.rhs_dim}, {"hypotheses", hyp}, {"claims", claims}};
      if (const Check* gate = r.first_failed_hypothesis()) out["failed_gate"] = gate->name;
      return out;
    }
    fail(ErrorKind::ParseError, "unknown command \"" + job.cmd + "\"");
  }

  Json validate(const Job& job) const {
    arity(job, 1, 1);
    const std::string& name = job.args[0];
    if (auto it = products_.find(name); it != products_.end()) {
      require_valid(validate_algebra(it->second.p.total), name);
      return {{"valid", true}, {"kind", "product"}, {"dim", it->second.p.total.dim}};
    }
    if (f_.modules.count(name)) return {{"valid", true}, {"kind", "module"}, {"dim", module(name).module.dim()}};
    if (auto it = f_.corners.find(name); it != f_.corners.end())
      return {{"valid", true}, {"kind", "corner"}, {"dim", it->second.corner.module_dim}};
    if (auto it = f_.characters.find(name); it != f_.characters.end())
      return {{"valid", true}, {"kind", "character"}, {"dim", it->second.character.values.size()}};
    return {{"valid", true}, {"kind", "algebra"}, {"dim", algebra(name).dim}};
  }

  const Character& character(const std::string& name, const std::string& over) const {
    auto it = f_.characters.find(name);
    if (it == f_.characters.end()) fail(ErrorKind::UnresolvedReference, "\"" + name + "\" is not a character");
    if (it->second.over != over)
      fail(ErrorKind::InvalidCharacter, "\"" + name + "\" is a character of \"" + it->second.over + "\"");
    return it->second.character;
  }

  Json build(const Job& job) {
    if (!job.raw.contains("kind") || !job.raw["kind"].is_string()) fail(ErrorKind::ParseError, "build needs \"kind\"");
    const std::string kind = job.raw["kind"];
    const auto& args = job.args;
    Product out;
    if (kind == "semidirect") {
      arity(job, 2, 2);
      const NamedModule& u = module(args[1]);
      if (u.over != args[0]) fail(ErrorKind::DimensionMismatch, "\"" + args[1] + "\" is not over \"" + args[0] + "\"");
      out.p = semidirect(algebra(args[0]), u.module);
    } else if (kind == "direct") {
      arity(job, 2, 2);
      out.p = direct_product(algebra(args[0]), algebra(args[1]));
    } else if (kind == "module-extension") {
      arity(job, 2, 2);
      Acted m = acted(args[1]);
      if (m.over != args[0]) fail(ErrorKind::DimensionMismatch, "\"" + args[1] + "\" is not over \"" + args[0] + "\"");
      out.p = module_extension(algebra(args[0]), m.action);
    } else if (kind == "triangular") {
      arity(job, 3, 3);
      auto it = f_.corners.find(args[2]);
      if (it == f_.corners.end()) fail(ErrorKind::UnresolvedReference, "\"" + args[2] + "\" is not a corner bimodule");
      if (it->second.left_over != args[0] || it->second.right_over != args[1])
        fail(ErrorKind::DimensionMismatch, "\"" + args[2] + "\" is not an (" + args[0] + "," + args[1] + ")-bimodule");
      out.p = triangular(algebra(args[0]), algebra(args[1]), it->second.corner);
    } else if (kind == "theta-lau") {
      arity(job, 3, 3);
      out.p = theta_lau(algebra(args[0]), algebra(args[1]), character(args[2], args[0]));
    } else if (kind == "unitization") {
      arity(job, 1, 1);
      out.p = unitization(algebra(args[0]));
    } else if (kind == "alpha") {
      arity(job, 2, 2);
      const Algebra& a = algebra(args[0]);
      const Algebra& u = algebra(args[1]);
      out.p = alpha_product(a, u, map_arg(job, a.dim, u.dim, "alpha"));
    } else if (kind == "example-3.3") {
      arity(job, 1, 1);
      DerivationFixture fx = fixture_example_3_3(algebra(args[0]));
      out = {fx.algebra, fx.derivation};
    } else if (kind == "example-3.4") {
      arity(job, 2, 2);
      Acted c = acted(args[1]);
      if (c.over != args[0]) fail(ErrorKind::DimensionMismatch, "\"" + args[1] + "\" is not over \"" + args[0] + "\"");
      const Algebra& a = algebra(args[0]);
      DerivationFixture fx = fixture_example_3_4(a, c.action, map_arg(job, c.action.module_dim, a.dim, "gamma"));
      out = {fx.algebra, fx.derivation};
    } else {
      fail(ErrorKind::ParseError, "unknown build kind \"" + kind + "\"");
    }
    std::string name = job.raw.contains("as") ? job.raw["as"].get<std::string>() : "job" + std::to_string(job.index);
    out.p.total.name = name;
    Json res = {{"name", name}, {"kind", std::string(to_string(out.p.kind))}, {"dim", out.p.total.dim},
                {"dim_a", out.p.n()}, {"dim_u", out.p.m()}};
    products_[name] = std::move(out);
    return res;
  }

  Json spaces(const Job& job) const {
    arity(job, 1, 2);
    Algebra a;
    ModuleAlgebra u;
    if (job.args.size() == 1) {
      const SemidirectAlgebra& p = product(job.args[0]).p;
      a = p.part_a;
      u = p.part_u;
    } else {
      const NamedModule& m = module(job.args[1]);
      if (m.over != job.args[0]) fail(ErrorKind::DimensionMismatch, "\"" + job.args[1] + "\" is not over \"" + job.args[0] + "\"");
      a = algebra(job.args[0]);
      u = m.module;
    }
    LinearMapSpace hom = hom_space(u.action, u.action);
    Subspace hz = intersect(hom.space, derivation_space(u.algebra).space);
    return {{"R", map_space_json(r_space(a, u))},
            {"C", map_space_json(c_space(a, u))},
            {"I", map_space_json(i_space(a, u))},
            {"Hom", map_space_json(hom)},
            {"Hom_Z1", map_space_json(LinearMapSpace(u.dim(), u.dim(), hz))}};
  }

  Json decompose(const Job& job) const {
    arity(job, 1, 1);
    const SemidirectAlgebra& p = product(job.args[0]).p;
    const std::size_t N = p.total.dim;
    Matrix d = map_arg(job, N, N);
    BlockDecomposition b = split_blocks(d, p);
    Json conds = Json::array();
    for (const Check& c : b.condition_report) conds.push_back(check_json(c));
    return {{"is_derivation", is_derivation(d, p.total, regular_action(p.total))},
            {"conditions_hold", b.all_conditions_hold()},
            {"tau1_zero", b.tau1.is_zero()},
            {"delta1", to_json(b.delta1)},
            {"delta2", to_json(b.delta2)},
            {"tau1", to_json(b.tau1)},
            {"tau2", to_json(b.tau2)},
            {"conditions", conds}};
  }

  Json witness(const Job& job) const {
    arity(job, 1, 1);
    if (products_.count(job.args[0])) {
      const SemidirectAlgebra& p = product(job.args[0]).p;
      std::optional<InnerPair> w = inner_characterization(map_arg(job, p.total.dim, p.total.dim), p);
      if (!w) return {{"inner", false}};
      return {{"inner", true}, {"a0", to_json(w->a0)}, {"x0", to_json(w->x0)}};
    }
    const Algebra& a = algebra(job.args[0]);
    std::optional<Vector> w = inner_witness(map_arg(job, a.dim, a.dim), a, regular_action(a));
    if (!w) return {{"inner", false}};
    return {{"inner", true}, {"x", to_json(*w)}};
  }

  const InstanceFile& f_;
  std::map<std::string, Product> products_;
};

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int depth) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) render_value(out, k, sub, depth + 1);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    out << pad << key << ":\n";
    for (const Json& item : v) {
      if (item.is_object() && item.contains("name") && item.contains("holds")) {
        out << pad << "  " << (item["holds"].get<bool>() ? "[holds] " : "[fails] ") << item["name"].get<std::string>();
        if (item.contains("witness")) out << " (" << item["witness"].get<std::string>() << ")";
        out << "\n";
      } else {
        out << pad << "  " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

RunResult run_jobs(const InstanceFile& f) { return Runner(f).run(); }

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::ValidationFailed ? exit_invalid : exit_usage;
}

RunResult run_file(const std::filesystem::path& path) {
  try {
    return run_jobs(parse_instance(path));
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = exit_code_for(e);
    r.report = {{"tool", "semidirect"},
                {"version", version},
                {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}},
                {"jobs", Json::array()},
                {"summary", {{"jobs", 0}, {"exit_code", r.exit_code}}}};
    return r;
  }
}

std::string render(const RunResult& r, ReportFormat format) {
  if (format == ReportFormat::Json) return r.report.dump(2) + "\n";
  std::ostringstream out;
  if (r.report.contains("error")) out << "error: " << r.report["error"]["message"].get<std::string>() << "\n";
  for (const Json& job : r.report["jobs"]) {
    out << "job " << job["index"].get<std::size_t>() << " " << job["cmd"].get<std::string>();
    for (const Json& a : job["args"]) out << " " << a.get<std::string>();
    out << ": " << job["status"].get<std::string>() << "\n";
    if (job.contains("error")) out << "  " << job["error"]["message"].get<std::string>() << "\n";
    if (job.contains("expectation")) out << "  expected " << job["expectation"].dump() << "\n";
    if (job.contains("result"))
      for (const auto& [k, v] : job["result"].items()) render_value(out, k, v, 1);
  }
  const Json& s = r.report["summary"];
  out << "summary:";
  for (const auto& [k, v] : s.items()) out << " " << k << "=" << v.dump();
  out << "\n";
  return out.str();
}

}  // namespace semidirect::cli
