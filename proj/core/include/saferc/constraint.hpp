#pragma once

#include <functional>
#include <string_view>

#include "saferc/error.hpp"
#include "saferc/region.hpp"
#include "saferc/violation.hpp"

namespace saferc {

/// Process-global runtime-constraint handler. `message` is the rendered
/// diagnostic line without a terminator.
using ConstraintHandler = void (*)(std::string_view message, const Violation& violation,
                                   ErrorCode code);

/// Installs `handler` and returns the previously installed one. Passing nullptr
/// restores the default (abort_handler_s).
ConstraintHandler set_constraint_handler_s(ConstraintHandler handler) noexcept;

/// Currently installed handler (never nullptr).
ConstraintHandler current_constraint_handler() noexcept;

/// Writes the diagnostic line to the diagnostic sink and terminates the process
/// with the configured abort status.
[[noreturn]] void abort_handler_s(std::string_view message, const Violation& violation,
                                  ErrorCode code);

/// Writes the diagnostic line to the diagnostic sink and returns.
void ignore_handler_s(std::string_view message, const Violation& violation, ErrorCode code);

/// Exit status used by abort_handler_s. Defaults to 134. Returns the previous value.
int set_abort_status(int status) noexcept;

/// Destination for diagnostic lines (one call per line, terminator included).
using DiagnosticSink = std::function<void(std::string_view line)>;

/// Replaces the diagnostic sink; an empty function restores standard error.
DiagnosticSink set_diagnostic_sink(DiagnosticSink sink);

/// Sends `line` plus a newline to the diagnostic sink.
void emit_diagnostic(std::string_view line);

/// Renders the violation, invokes the current handler once and records the code
/// in the calling thread's last-error slot. Records without error_present are
/// ignored and yield 0.
ErrorCode report_violation(const Violation& violation);

/// Code of the most recent failure on this thread (0 if none).
ErrorCode last_error() noexcept;
void clear_last_error() noexcept;

/// Records a non-handler failure status (e.g. "not found") in the last-error slot
/// and returns it unchanged.
ErrorCode record_status(ErrorCode code) noexcept;

// Validator suite. Each returns 0 when its predicate holds; otherwise it reports
// exactly one violation through report_violation and returns that code.

ErrorCode validate_not_null(std::string_view function, std::string_view param, bool present);

inline ErrorCode validate_not_null(std::string_view function, std::string_view param,
                                   const void* ptr) {
  return validate_not_null(function, param, ptr != nullptr);
}

ErrorCode validate_value_in_range(std::string_view function, std::string_view param,
                                  std::size_t value, ValueRange range);

ErrorCode validate_not_zero(std::string_view function, std::string_view param, std::size_t value);

ErrorCode validate_rsize_limit(std::string_view function, std::string_view param,
                               std::size_t value);

ErrorCode validate_no_overlap(std::string_view function, std::string_view first_param,
                              std::string_view second_param, const MemRegion& a,
                              const MemRegion& b);

ErrorCode report_token_end_not_found(std::string_view function, std::string_view param);

/// Reports an arbitrary kind with a parameter name; used where a dedicated
/// validator would only wrap a single comparison.
ErrorCode report_kind(ErrorKind kind, std::string_view function, std::string_view param);

/// RAII helper: installs a handler for the current scope and restores the
/// previous one on exit.
class ScopedConstraintHandler {
 public:
  explicit ScopedConstraintHandler(ConstraintHandler handler) noexcept
      : previous_(set_constraint_handler_s(handler)) {}
  ~ScopedConstraintHandler() { set_constraint_handler_s(previous_); }
  ScopedConstraintHandler(const ScopedConstraintHandler&) = delete;
  ScopedConstraintHandler& operator=(const ScopedConstraintHandler&) = delete;

 private:
  ConstraintHandler previous_;
};

/// RAII helper for the diagnostic sink.
class ScopedDiagnosticSink {
 public:
  explicit ScopedDiagnosticSink(DiagnosticSink sink) : previous_(set_diagnostic_sink(std::move(sink))) {}
  ~ScopedDiagnosticSink() { set_diagnostic_sink(std::move(previous_)); }
  ScopedDiagnosticSink(const ScopedDiagnosticSink&) = delete;
  ScopedDiagnosticSink& operator=(const ScopedDiagnosticSink&) = delete;

 private:
  DiagnosticSink previous_;
};

}  // namespace saferc
