#include <climits>
#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/stdio.hpp"

namespace saferc {
namespace {

int negative(ErrorCode rc) noexcept { return -rc; }

ErrorCode report_malformed(std::string_view function) {
  return report_violation(Violation{ErrorKind::InvalidFormatParameterN, std::string{function},
                                    "format", std::nullopt, "malformed"});
}

// Runs the format checks shared by every printf-style entry point and renders.
// Returns 0 and fills `out` on success.
ErrorCode checked_render(std::string_view function, Format format, std::span<const ArgValue> args,
                         std::string& out) {
  if (ErrorCode rc = validate_not_null(function, "format", format.has_value())) return rc;
  if (ErrorCode rc = validate_format_n(function, *format)) return rc;
  if (ErrorCode rc = validate_format_s(function, format, args)) return rc;

  auto items = parse_directives(*format);
  if (!items) return report_malformed(function);
  auto rendered = render(items.value(), args);
  if (!rendered) return report_malformed(function);
  if (rendered.value().size() > static_cast<std::size_t>(INT_MAX)) {
    return report_kind(ErrorKind::ParameterOutOfRange, function, "format");
  }
  out = std::move(rendered).value();
  return kOk;
}

}  // namespace

int format_write(std::string_view function_name, ByteSink& sink, Format format,
                 std::span<const ArgValue> args) {
  std::string text;
  if (ErrorCode rc = checked_render(function_name, format, args, text)) return negative(rc);
  sink.write(text);
  return static_cast<int>(text.size());
}

int format_render_bounded(std::string_view function_name, char* s, rsize_t n, Format format,
                          std::span<const ArgValue> args, bool truncating) {
  const auto fail = [&](ErrorCode rc) {
    if (s != nullptr && n != 0 && within_rsize_max(n)) s[0] = '\0';
    return negative(rc);
  };

  if (ErrorCode rc = validate_not_null(function_name, "s", s)) return negative(rc);
  if (ErrorCode rc = validate_not_null(function_name, "format", format.has_value())) return fail(rc);
  if (ErrorCode rc = validate_rsize_limit(function_name, "n", n)) return negative(rc);
  if (ErrorCode rc = validate_not_zero(function_name, "n", n)) return negative(rc);

  std::string text;
  if (ErrorCode rc = checked_render(function_name, format, args, text)) return fail(rc);

  if (truncating) {
    const std::size_t kept = text.size() < n ? text.size() : n - 1;
    std::memcpy(s, text.data(), kept);
    s[kept] = '\0';
    return static_cast<int>(text.size());
  }
  if (text.size() >= n) {
    return fail(report_kind(ErrorKind::ParameterOutOfRange, function_name, "n"));
  }
  std::memcpy(s, text.c_str(), text.size() + 1);
  return static_cast<int>(text.size());
}

}  // namespace saferc
