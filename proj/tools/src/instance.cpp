#include "semidirect/cli/instance.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace semidirect::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) parse_fail(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::size_t index_field(const Json& obj, const char* key, std::size_t bound, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    parse_fail(where + "/" + key, "expected a non-negative integer");
  auto i = v.get<unsigned long long>();
  if (i >= bound) parse_fail(where + "/" + key, "index " + std::to_string(i) + " out of range " + std::to_string(bound));
  return static_cast<std::size_t>(i);
}

Rational rational_value(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where, "expected a string rational");
  auto q = parse_string_rational(v.get<std::string>());
  if (!q) parse_fail(where, "malformed rational \"" + v.get<std::string>() + "\"");
  return *q;
}

const Json& array_field(const Json& obj, const char* key, const std::string& where, bool optional = false) {
  static const Json empty = Json::array();
  if (optional && !obj.contains(key)) return empty;
  const Json& v = field(obj, key, where);
  if (!v.is_array()) parse_fail(where + "/" + key, "expected an array");
  return v;
}

// Fills t(a, b, c) from sparse entries keyed by the three given names.
void read_sparse(const Json& entries, const std::string& where, Tensor3& t, const char* k0, const char* k1,
                 const char* k2) {
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    std::string at = where + "/" + std::to_string(e);
    std::array<std::size_t, 3> idx{index_field(entries[e], k0, t.dim(0), at), index_field(entries[e], k1, t.dim(1), at),
                                   index_field(entries[e], k2, t.dim(2), at)};
    if (!seen.insert(idx).second) parse_fail(at, "duplicate entry");
    t(idx[0], idx[1], idx[2]) = rational_value(field(entries[e], "c", at), at + "/c");
  }
}

std::size_t dim_field(const Json& obj, const std::string& where) {
  const Json& v = field(obj, "dim", where);
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(where + "/dim", "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<unsigned long long>());
}

const Json& section(const Json& doc, const char* key) {
  static const Json empty = Json::array();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_array()) parse_fail(std::string("/") + key, "expected an array");
  return *it;
}

void validated(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) fail(ErrorKind::ValidationFailed, what + ": " + r.summary());
}

}  // namespace

std::optional<Rational> parse_string_rational(const std::string& s) {
  static const std::regex re("-?[0-9]+(/[1-9][0-9]*)?");
  if (!std::regex_match(s, re)) return std::nullopt;
  return Rational::parse(s);
}

Matrix parse_matrix(const Json& rows, std::size_t cols, const std::string& where) {
  if (!rows.is_array()) parse_fail(where, "expected an array of rows");
  std::vector<Vector> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string at = where + "/" + std::to_string(r);
    if (!rows[r].is_array() || rows[r].size() != cols)
      parse_fail(at, "expected a row of " + std::to_string(cols) + " rationals");
    Vector v;
    for (std::size_t c = 0; c < cols; ++c) v.push_back(rational_value(rows[r][c], at + "/" + std::to_string(c)));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out, cols);
}

InstanceFile parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) parse_fail("/", "top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "algebras" && key != "modules" && key != "characters" && key != "jobs")
      parse_fail("/" + key, "unknown top-level key");

  InstanceFile f;
  std::set<std::string> names;
  auto claim = [&](const std::string& name, const std::string& where) {
    if (name.empty()) parse_fail(where, "empty name");
    if (!names.insert(name).second) parse_fail(where, "duplicate name \"" + name + "\"");
  };
  auto algebra_ref = [&](const std::string& name, const std::string& where) -> const Algebra& {
    auto it = f.algebras.find(name);
    if (it == f.algebras.end()) fail(ErrorKind::UnresolvedReference, where + ": no algebra \"" + name + "\"");
    return it->second;
  };

  const Json& algebras = section(doc, "algebras");
  for (std::size_t a = 0; a < algebras.size(); ++a) {
    std::string at = "/algebras/" + std::to_string(a);
    std::string name = string_field(algebras[a], "name", at);
    claim(name, at + "/name");
    Algebra alg(name, dim_field(algebras[a], at));
    read_sparse(array_field(algebras[a], "mult", at), at + "/mult", alg.mult, "i", "j", "k");
    f.algebras.emplace(name, std::move(alg));
  }

  const Json& modules = section(doc, "modules");
  for (std::size_t u = 0; u < modules.size(); ++u) {
    std::string at = "/modules/" + std::to_string(u);
    const Json& obj = modules[u];
    std::string name = string_field(obj, "name", at);
    claim(name, at + "/name");
    std::string over = string_field(obj, "over", at);
    const Algebra& a = algebra_ref(over, at + "/over");
    std::size_t m = dim_field(obj, at);
    if (obj.contains("right_over")) {
      std::string right_over = string_field(obj, "right_over", at);
      const Algebra& b = algebra_ref(right_over, at + "/right_over");
      if (!array_field(obj, "mult", at, true).empty()) parse_fail(at + "/mult", "a corner bimodule has no product");
      CornerBimodule c(a.dim, b.dim, m);
      read_sparse(array_field(obj, "left", at, true), at + "/left", c.left, "i", "p", "q");
      read_sparse(array_field(obj, "right", at, true), at + "/right", c.right, "p", "i", "q");
      f.corners.emplace(name, NamedCorner{over, right_over, std::move(c)});
      continue;
    }
    ModuleAlgebra mod{Algebra(name, m), BimoduleAction(a.dim, m)};
    read_sparse(array_field(obj, "mult", at, true), at + "/mult", mod.algebra.mult, "i", "j", "k");
    read_sparse(array_field(obj, "left", at, true), at + "/left", mod.action.left, "i", "p", "q");
    read_sparse(array_field(obj, "right", at, true), at + "/right", mod.action.right, "p", "i", "q");
    f.modules.emplace(name, NamedModule{over, std::move(mod)});
  }

  const Json& characters = section(doc, "characters");
  for (std::size_t t = 0; t < characters.size(); ++t) {
    std::string at = "/characters/" + std::to_string(t);
    std::string name = string_field(characters[t], "name", at);
    claim(name, at + "/name");
    std::string over = string_field(characters[t], "over", at);
    const Algebra& a = algebra_ref(over, at + "/over");
    const Json& values = array_field(characters[t], "values", at);
    if (values.size() != a.dim)
      parse_fail(at + "/values", "expected " + std::to_string(a.dim) + " values for \"" + over + "\"");
    Character ch{name, {}};
    for (std::size_t i = 0; i < values.size(); ++i)
      ch.values.push_back(rational_value(values[i], at + "/values/" + std::to_string(i)));
    f.characters.emplace(name, NamedCharacter{over, std::move(ch)});
  }

  // Static reference walk: every argument names a definition or an earlier build result.
  const Json& jobs = section(doc, "jobs");
  std::set<std::string> known = names;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    std::string at = "/jobs/" + std::to_string(j);
    Job job{j, string_field(jobs[j], "cmd", at), {}, jobs[j]};
    for (std::size_t k = 0; k < array_field(jobs[j], "args", at, true).size(); ++k) {
      const Json& arg = jobs[j]["args"][k];
      std::string where = at + "/args/" + std::to_string(k);
      if (!arg.is_string()) parse_fail(where, "expected a name");
      if (!known.count(arg.get<std::string>()))
        fail(ErrorKind::UnresolvedReference, where + ": unknown name \"" + arg.get<std::string>() + "\"");
      job.args.push_back(arg.get<std::string>());
    }
    if (jobs[j].contains("as")) {
      std::string as = string_field(jobs[j], "as", at);
      if (!known.insert(as).second) parse_fail(at + "/as", "duplicate name \"" + as + "\"");
    }
    f.jobs.push_back(std::move(job));
  }

  // Everything validates before any job runs.
  for (const auto& [name, a] : f.algebras) validated(validate_algebra(a), "algebra \"" + name + "\"");
  for (const auto& [name, u] : f.modules) {
    const Algebra& a = f.algebras.at(u.over);
    validated(validate_algebra(u.module.algebra), "module \"" + name + "\" product");
    validated(validate_module(a, u.module), "module \"" + name + "\"");
  }
  for (const auto& [name, c] : f.corners)
    validated(validate_corner(f.algebras.at(c.left_over), f.algebras.at(c.right_over), c.corner),
              "corner \"" + name + "\"");
  for (const auto& [name, t] : f.characters)
    if (!validate_character(f.algebras.at(t.over), t.character))
      fail(ErrorKind::ValidationFailed, "character \"" + name + "\" is not multiplicative or is zero");
  return f;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(q.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

}  // namespace semidirect::cli
