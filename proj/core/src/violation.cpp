#include "saferc/violation.hpp"

namespace saferc {

Violation::Violation(ErrorKind kind, std::string function_name, std::string param_name,
                     std::optional<std::string> pair_param_name,
                     std::optional<std::string> detail)
    : kind_(kind),
      function_name_(std::move(function_name)),
      param_name_(std::move(param_name)),
      pair_param_name_(std::move(pair_param_name)),
      detail_(std::move(detail)),
      error_present_(kind != ErrorKind::NoError) {}

std::string render_diagnostic(const Violation& violation) {
  std::string line = violation.function_name();
  line += "(): ";

  const bool format_kind = violation.kind() == ErrorKind::InvalidFormatParameterS ||
                           violation.kind() == ErrorKind::InvalidFormatParameterN;
  if (format_kind) {
    line += "invalid format parameter (";
    if (violation.detail()) {
      line += *violation.detail();
    } else {
      line += violation.kind() == ErrorKind::InvalidFormatParameterN ? "%n" : "%s";
    }
    line += ')';
    return line;
  }

  line += message_for(violation.kind());
  line += " : ";
  line += violation.param_name();
  if (violation.pair_param_name()) {
    line += " and ";
    line += *violation.pair_param_name();
  }
  return line;
}

}  // namespace saferc
