#include "saferc/constraint.hpp"
#include "saferc/format.hpp"

namespace saferc {
namespace {

constexpr std::string_view kFormatParam = "format";

ErrorCode report_format(ErrorKind kind, std::string_view function, std::string detail) {
  return report_violation(
      Violation{kind, std::string{function}, std::string{kFormatParam}, std::nullopt, std::move(detail)});
}

}  // namespace

ErrorCode validate_format_n(std::string_view function, std::string_view format) {
  const auto parsed = parse_directives(format);
  if (!parsed) return report_format(ErrorKind::InvalidFormatParameterN, function, "malformed");
  for (const auto& item : parsed.value()) {
    const auto* d = std::get_if<Directive>(&item);
    if (d != nullptr && d->conversion == 'n') {
      return report_format(ErrorKind::InvalidFormatParameterN, function, "%n");
    }
  }
  return kOk;
}

ErrorCode validate_format_s(std::string_view function, std::optional<std::string_view> format,
                            std::span<const ArgValue> args) {
  if (const ErrorCode rc = validate_not_null(function, kFormatParam, format.has_value())) return rc;
  const auto parsed = parse_directives(*format);
  if (!parsed) return report_format(ErrorKind::InvalidFormatParameterN, function, "malformed");

  std::size_t next = 0;
  for (const auto& item : parsed.value()) {
    const auto* d = std::get_if<Directive>(&item);
    if (d == nullptr) continue;
    const std::size_t value_index = next + d->args_consumed() - (d->conversion == '%' ? 0 : 1);
    next += d->args_consumed();
    if (d->conversion != 's' || value_index >= args.size()) continue;
    const auto* str = std::get_if<arg::Str>(&args[value_index]);
    if (str != nullptr && !str->text) {
      return report_format(ErrorKind::InvalidFormatParameterS, function, "NULL argument for %s");
    }
  }
  return kOk;
}

}  // namespace saferc
