#include "saferc/constraint.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace saferc {
namespace {

std::atomic<ConstraintHandler> g_handler{&abort_handler_s};
std::atomic<int> g_abort_status{134};

thread_local ErrorCode t_last_error = kOk;

void write_to_stderr(std::string_view line) {
  // Payload written to std::cout must land before the diagnostic when both
  // streams share a terminal or pipe.
  std::cout.flush();
  std::cerr.write(line.data(), static_cast<std::streamsize>(line.size()));
  std::cerr.flush();
}

struct SinkRegistry {
  std::mutex mutex;
  DiagnosticSink sink;
};

SinkRegistry& sinks() {
  static SinkRegistry registry;
  return registry;
}

}  // namespace

ConstraintHandler set_constraint_handler_s(ConstraintHandler handler) noexcept {
  if (handler == nullptr) handler = &abort_handler_s;
  return g_handler.exchange(handler, std::memory_order_acq_rel);
}

ConstraintHandler current_constraint_handler() noexcept {
  return g_handler.load(std::memory_order_acquire);
}

void abort_handler_s(std::string_view message, const Violation&, ErrorCode) {
  emit_diagnostic(message);
  std::cout.flush();
  std::cerr.flush();
  std::fflush(nullptr);
  std::_Exit(g_abort_status.load(std::memory_order_relaxed));
}

void ignore_handler_s(std::string_view message, const Violation&, ErrorCode) {
  emit_diagnostic(message);
}

int set_abort_status(int status) noexcept {
  return g_abort_status.exchange(status, std::memory_order_relaxed);
}

DiagnosticSink set_diagnostic_sink(DiagnosticSink sink) {
  auto& registry = sinks();
  std::lock_guard lock{registry.mutex};
  std::swap(registry.sink, sink);
  return sink;
}

void emit_diagnostic(std::string_view line) {
  std::string text{line};
  text += '\n';
  auto& registry = sinks();
  std::lock_guard lock{registry.mutex};
  if (registry.sink) {
    registry.sink(text);
  } else {
    write_to_stderr(text);
  }
}

ErrorCode report_violation(const Violation& violation) {
  if (!violation.error_present()) return kOk;
  const ErrorCode code = violation.code();
  t_last_error = code;
  const std::string message = render_diagnostic(violation);
  current_constraint_handler()(message, violation, code);
  return code;
}

ErrorCode last_error() noexcept { return t_last_error; }

void clear_last_error() noexcept { t_last_error = kOk; }

ErrorCode record_status(ErrorCode code) noexcept {
  if (code != kOk) t_last_error = code;
  return code;
}

ErrorCode report_kind(ErrorKind kind, std::string_view function, std::string_view param) {
  return report_violation(Violation{kind, std::string{function}, std::string{param}});
}

ErrorCode validate_not_null(std::string_view function, std::string_view param, bool present) {
  if (present) return kOk;
  return report_kind(ErrorKind::NullParameterNotAllowed, function, param);
}

ErrorCode validate_value_in_range(std::string_view function, std::string_view param,
                                  std::size_t value, ValueRange range) {
  if (range.contains(value)) return kOk;
  return report_violation(Violation{ErrorKind::ParameterOutOfRange, std::string{function},
                                    std::string{param}, std::nullopt,
                                    std::to_string(value)});
}

ErrorCode validate_not_zero(std::string_view function, std::string_view param, std::size_t value) {
  if (value != 0) return kOk;
  return report_kind(ErrorKind::NotZero, function, param);
}

ErrorCode validate_rsize_limit(std::string_view function, std::string_view param,
                               std::size_t value) {
  if (within_rsize_max(value)) return kOk;
  return report_violation(Violation{ErrorKind::RsizeMaxExceeded, std::string{function},
                                    std::string{param}, std::nullopt, std::to_string(value)});
}

ErrorCode validate_no_overlap(std::string_view function, std::string_view first_param,
                              std::string_view second_param, const MemRegion& a,
                              const MemRegion& b) {
  if (!regions_overlap(a, b)) return kOk;
  return report_violation(Violation{ErrorKind::ObjectsOverlap, std::string{function},
                                    std::string{first_param}, std::string{second_param}});
}

ErrorCode report_token_end_not_found(std::string_view function, std::string_view param) {
  return report_kind(ErrorKind::TokenEndNotFound, function, param);
}

}  // namespace saferc
