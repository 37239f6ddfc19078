#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "saferc/error.hpp"

namespace saferc {

/// Diagnostic record for one detected runtime-constraint violation.
///
/// Offending values are captured as rendered text (`detail`) at validation time
/// so a record never refers back into caller memory.
class Violation {
 public:
  Violation() = default;
  Violation(ErrorKind kind, std::string function_name, std::string param_name,
            std::optional<std::string> pair_param_name = std::nullopt,
            std::optional<std::string> detail = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCode code() const noexcept { return code_of(kind_); }
  const std::string& function_name() const noexcept { return function_name_; }
  const std::string& param_name() const noexcept { return param_name_; }
  const std::optional<std::string>& pair_param_name() const noexcept { return pair_param_name_; }
  const std::optional<std::string>& detail() const noexcept { return detail_; }
  bool error_present() const noexcept { return error_present_; }

  friend bool operator==(const Violation&, const Violation&) = default;

 private:
  ErrorKind kind_ = ErrorKind::NoError;
  std::string function_name_;
  std::string param_name_;
  std::optional<std::string> pair_param_name_;
  std::optional<std::string> detail_;
  bool error_present_ = false;
};

/// Renders the one-line diagnostic (no terminator):
///   `fn(): <message> : param`, `fn(): <message> : p1 and p2`, or for format
///   kinds `fn(): invalid format parameter (<detail>)`.
std::string render_diagnostic(const Violation& violation);

}  // namespace saferc
