// Command-line front end: runs verification suites (JSON or text reports)
// and emits the golden CSV tables. Exit codes: 0 = all checks passed,
// 1 = at least one check failed, 2 = usage or input error.
#include "hopf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

namespace {

int write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of the invariant sphere frames, their bracket "
      "tables, and the three sphere fibrations"};
  app.require_subcommand(1);

  hopf::SuiteConfig config;
  std::string table_kind;
  std::string table_output;

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite and report");
  verify
      ->add_option("--suite", config.suite,
                   "algebra, s3, s3-cr, s3-hopf, s7-frame, s7-cr, s7-quat, "
                   "or all")
      ->capture_default_str();
  verify
      ->add_option("--samples", config.samples,
                   "number of pseudo-random sample points per sphere")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()))
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "sampler seed")
      ->capture_default_str();
  verify->add_option("--format", config.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  verify->add_option("--output", config.output,
                     "write the report to this file instead of stdout");

  CLI::App* tables =
      app.add_subcommand("tables", "emit a golden CSV table");
  tables->add_option("--kind", table_kind, "oct-mult or commutators")
      ->required()
      ->check(CLI::IsMember({"oct-mult", "commutators"}));
  tables->add_option("--output", table_output,
                     "write the CSV to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      hopf::VerificationReport report = hopf::run_suite(config);
      std::string rendered = config.format == "json"
                                 ? hopf::render_json(report)
                                 : hopf::render_text(report);
      int rc = write_or_print(rendered, config.output);
      if (rc != 0) return rc;
      return report.failed == 0 ? 0 : 1;
    }
    return write_or_print(hopf::emit_table(table_kind), table_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
