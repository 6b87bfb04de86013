#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semidirect/cli/battery.hpp"

namespace semidirect::cli {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t max_dim = 3;
  std::size_t cases = 200;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::optional<std::filesystem::path> fixture_dir;
  bool shrink = true;
};

struct VerdictCounts {
  std::size_t verified = 0;
  std::size_t not_met = 0;
  std::size_t mismatch = 0;
};

struct CaseResult {
  std::size_t index = 0;
  ProductFamily family = ProductFamily::Direct;
  std::string recipe;
  std::size_t dim_a = 0;
  std::size_t dim_u = 0;
  std::size_t checks = 0;
  std::vector<Check> failures;
  std::vector<TheoremReport> reports;
  std::optional<std::string> shrunk;  // smallest failing instance found
};

struct SelftestSummary {
  SelftestOptions options;
  std::vector<CaseResult> cases;
  std::vector<Check> fixture_checks;
  std::map<std::string, VerdictCounts> verdicts;  // by theorem id

  std::size_t total_checks() const;
  std::size_t failed_checks() const;
  std::size_t mismatches() const;
  bool ok() const { return failed_checks() == 0 && mismatches() == 0; }
  /// Pass/fail counts and the failing cases; identical for identical options.
  std::string render() const;
};

/// One generated case: family by index, dims <= max_dim.
CaseResult run_case(std::uint64_t seed, std::size_t max_dim, std::size_t index);

/// The named worked examples, checked against their known values.
std::vector<Check> builtin_fixture_checks();

/// Runs every *.json under `dir` in name order; each must exit 0.
std::vector<Check> fixture_file_checks(const std::filesystem::path& dir);

/// Throws ShapeMismatch when cases or max_dim is 0.
SelftestSummary selftest(const SelftestOptions& options);

}  // namespace semidirect::cli
