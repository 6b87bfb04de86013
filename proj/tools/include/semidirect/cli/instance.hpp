#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semidirect/semidirect.hpp"
#include "json.hpp"

namespace semidirect::cli {

using Json = nlohmann::ordered_json;

struct NamedModule {
  std::string over;
  ModuleAlgebra module;
};

/// A bimodule with different algebras on each side; it carries no product.
struct NamedCorner {
  std::string left_over;
  std::string right_over;
  CornerBimodule corner;
};

struct NamedCharacter {
  std::string over;
  Character character;
};

struct Job {
  std::size_t index = 0;
  std::string cmd;
  std::vector<std::string> args;
  Json raw;  // the whole job object, for the optional keys
};

struct InstanceFile {
  std::map<std::string, Algebra> algebras;
  std::map<std::string, NamedModule> modules;
  std::map<std::string, NamedCorner> corners;
  std::map<std::string, NamedCharacter> characters;
  std::vector<Job> jobs;
};

/// Parses and validates. ParseError messages carry a byte offset or a JSON
/// pointer; ValidationFailed names the axiom and witness indices.
InstanceFile parse_instance_text(const std::string& text);
InstanceFile parse_instance(const std::filesystem::path& path);

/// Strict string-rational: -?[0-9]+(/[1-9][0-9]*)?
std::optional<Rational> parse_string_rational(const std::string& s);

/// Rows of string rationals; every row must have `cols` entries.
Matrix parse_matrix(const Json& rows, std::size_t cols, const std::string& where);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);

}  // namespace semidirect::cli
