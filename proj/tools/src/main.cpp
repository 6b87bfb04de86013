#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semidirect/cli/runner.hpp"
#include "semidirect/cli/selftest.hpp"

#ifndef SEMIDIRECT_FIXTURE_DIR
#define SEMIDIRECT_FIXTURE_DIR ""
#endif

namespace cli = semidirect::cli;

int main(int argc, char** argv) {
  CLI::App app{"Derivations of semidirect products of finite-dimensional algebras over Q"};
  app.set_version_flag("--version", std::string("semidirect ") + semidirect::version);
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and validate an instance file");
  validate->add_option("file", validate_path)->required();

  std::string run_path, format = "text", out_path;
  auto* run = app.add_subcommand("run", "Run the jobs of an instance file");
  run->add_option("file", run_path)->required();
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out_path, "Write the report here instead of stdout");

  cli::SelftestOptions st;
  std::string fixtures = SEMIDIRECT_FIXTURE_DIR;
  bool no_fixtures = false;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded invariant battery");
  selftest->add_option("--seed", st.seed);
  selftest->add_option("--max-dim", st.max_dim);
  selftest->add_option("--cases", st.cases);
  selftest->add_option("--threads", st.threads);
  selftest->add_option("--fixtures", fixtures, "Directory of fixture instance files");
  selftest->add_flag("--no-fixtures", no_fixtures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_usage;
  }

  try {
    if (*validate) {
      cli::InstanceFile f = cli::parse_instance(validate_path);
      std::cout << "valid: " << f.algebras.size() << " algebras, " << f.modules.size() + f.corners.size()
                << " modules, " << f.characters.size() << " characters, " << f.jobs.size() << " jobs\n";
      return cli::exit_ok;
    }
    if (*run) {
      cli::RunResult r = cli::run_file(run_path);
      std::string text = cli::render(r, format == "json" ? cli::ReportFormat::Json : cli::ReportFormat::Text);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return cli::exit_usage;
        }
        out << text;
      }
      return r.exit_code;
    }
    if (!no_fixtures && !fixtures.empty()) st.fixture_dir = fixtures;
    cli::SelftestSummary s = cli::selftest(st);
    std::cout << s.render();
    return s.ok() ? cli::exit_ok : cli::exit_mismatch;
  } catch (const semidirect::Error& e) {
    std::cerr << e.what() << "\n";
    return cli::exit_code_for(e);
  }
}
