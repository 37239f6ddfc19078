#include "saferc_cli/lint.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "saferc/constraint.hpp"
#include "saferc/format.hpp"

namespace saferc::cli {
namespace {

void diagnose(std::string detail) {
  const Violation v{ErrorKind::InvalidFormatParameterN, "lint", "format", std::nullopt, std::move(detail)};
  emit_diagnostic(render_diagnostic(v));
}

}  // namespace

std::size_t lint_line(std::string_view format, std::ostream& out) {
  const auto parsed = parse_directives(format);
  if (!parsed) {
    diagnose("malformed");
    return 1;
  }

  std::size_t conversions = 0;
  std::size_t violations = 0;
  for (const auto& item : parsed.value()) {
    const auto* d = std::get_if<Directive>(&item);
    if (d == nullptr || d->conversion == '%') continue;
    ++conversions;
    if (d->conversion == 'n') {
      diagnose("%n");
      ++violations;
    }
  }
  if (violations == 0) out << "OK " << conversions << '\n';
  return violations;
}

LintSummary lint_stream(std::istream& in, std::ostream& out, bool stop_at_first) {
  LintSummary summary;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++summary.lines;
    const std::size_t found = lint_line(line, out);
    summary.diagnostics += found;
    if (found != 0 && stop_at_first) break;
  }
  return summary;
}

}  // namespace saferc::cli
