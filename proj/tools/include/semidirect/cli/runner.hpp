#pragma once

#include <string>

#include "semidirect/cli/instance.hpp"

namespace semidirect::cli {

enum class ReportFormat { Text, Json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_mismatch = 3;

struct RunResult {
  Json report;  // {tool, version, jobs, summary}
  int exit_code = exit_ok;
};

/// Runs every job in order. A failing job is recorded and later jobs still run.
RunResult run_jobs(const InstanceFile& f);

/// Parse plus run; parse and validation failures become a report with no jobs.
RunResult run_file(const std::filesystem::path& path);

/// Exit code for an error raised before any job ran.
int exit_code_for(const Error& e);

std::string render(const RunResult& r, ReportFormat format);

}  // namespace semidirect::cli
