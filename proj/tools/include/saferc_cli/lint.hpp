#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>

namespace saferc::cli {

struct LintSummary {
  std::size_t lines = 0;
  std::size_t diagnostics = 0;
};

/// Checks one format string. Prints "OK <directives>" to `out` (conversions,
/// not counting "%%") or one diagnostic per violation to the diagnostic sink.
/// Returns the number of diagnostics emitted.
std::size_t lint_line(std::string_view format, std::ostream& out);

/// Lints every line of `in`. With stop_at_first, processing ends after the
/// first line that produced a diagnostic.
LintSummary lint_stream(std::istream& in, std::ostream& out, bool stop_at_first);

}  // namespace saferc::cli
