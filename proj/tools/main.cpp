#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "saferc/constraint.hpp"
#include "saferc_cli/demo.hpp"
#include "saferc_cli/lint.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

saferc::ConstraintHandler handler_for(const std::string& mode) {
  return mode == "abort" ? &saferc::abort_handler_s : &saferc::ignore_handler_s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds-checked C library toolkit: format auditing and demo transcripts"};
  app.require_subcommand(1);

  auto* lint = app.add_subcommand("lint", "Audit printf-style format strings, one per line");
  std::string lint_file;
  std::string lint_format;
  std::string lint_handler = "abort";
  auto* file_opt = lint->add_option("--file", lint_file, "Read format strings from PATH");
  auto* format_opt = lint->add_option("--format", lint_format, "Audit a single inline format string");
  file_opt->excludes(format_opt);
  lint->add_option("--handler", lint_handler, "abort: stop at the first violation; ignore: report all")
      ->check(CLI::IsMember({"abort", "ignore"}));

  auto* demo = app.add_subcommand("demo", "Run a re-created test program and print its transcript");
  std::string demo_target;
  std::string demo_handler = "ignore";
  demo->add_option("target", demo_target, "stdio or string")
      ->required()
      ->check(CLI::IsMember({"stdio", "string"}));
  demo->add_option("--handler", demo_handler, "Constraint handler to install")
      ->check(CLI::IsMember({"abort", "ignore"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitUsage;
  }

  if (*lint) {
    saferc::cli::LintSummary summary;
    const bool stop_at_first = lint_handler == "abort";
    if (*format_opt) {
      std::istringstream in{lint_format};
      summary = saferc::cli::lint_stream(in, std::cout, stop_at_first);
    } else if (*file_opt) {
      std::ifstream in{lint_file};
      if (!in) {
        std::cerr << "saferc: cannot read " << lint_file << '\n';
        return kExitUsage;
      }
      summary = saferc::cli::lint_stream(in, std::cout, stop_at_first);
      if (in.bad()) return kExitUsage;
    } else {
      summary = saferc::cli::lint_stream(std::cin, std::cout, stop_at_first);
      if (std::cin.bad()) return kExitUsage;
    }
    std::cout.flush();
    return summary.diagnostics == 0 ? kExitClean : kExitViolations;
  }

  saferc::set_constraint_handler_s(handler_for(demo_handler));
  const int rc = demo_target == "string" ? saferc::cli::run_string_demo(std::cout)
                                         : saferc::cli::run_stdio_demo(std::cout);
  std::cout.flush();
  if (!std::cout) return kExitUsage;
  return rc;
}
