#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "saferc/error.hpp"
#include "saferc/format.hpp"
#include "saferc/stream.hpp"

namespace saferc {

using Format = std::optional<std::string_view>;

/// Formatted output engine behind the printf_s family.
///
/// Checks run as: format present, no n-conversion, no absent %s argument. On a
/// violation nothing is written and the result is -code. A format that cannot
/// be rendered with the given arguments is treated as kind 5 ("malformed").
/// Otherwise returns the number of bytes written to `sink`.
int format_write(std::string_view function_name, ByteSink& sink, Format format,
                 std::span<const ArgValue> args);

/// Bounded rendering behind snprintf_s (truncating) and sprintf_s.
///
/// Requires s and format present and 0 < n <= kRsizeMax. Truncating mode writes
/// at most n-1 bytes plus a terminator and returns the untruncated length.
/// Non-truncating mode reports kind 2 when the result does not fit. Any
/// violation leaves s[0] == '\0' (when s and n are usable) and returns -code.
int format_render_bounded(std::string_view function_name, char* s, rsize_t n, Format format,
                          std::span<const ArgValue> args, bool truncating);

/// Scanner behind the scanf_s family. Supports d u x s c and %% with an
/// optional width. %s and %c need an arg::OutBuffer carrying its capacity; d u
/// x need an arg::IntSlot. Returns the number of assigned slots; an oversize
/// %s match is a kind 2 violation that empties the buffer and stops the scan.
/// Up-front violations (absent input, %n, malformed format) return -code.
int scan_parse(std::string_view function_name, ByteSource* source, Format format,
               std::span<const ArgValue> outs);

/// Reads one line into s, without the newline. A line longer than n-1 bytes is a
/// kind 2 violation: s[0] is cleared, the rest of the line is discarded and
/// nullopt is returned. End of input before any byte also yields nullopt.
std::optional<std::string_view> gets_s(char* s, rsize_t n, ByteSource& source);
std::optional<std::string_view> gets_s(char* s, rsize_t n);

// Family wrappers. The v* forms take the argument list directly; the others
// accept ordinary values converted with make_arg.

inline int vfprintf_s(ByteSink& stream, Format format, std::span<const ArgValue> args) {
  return format_write("vfprintf_s", stream, format, args);
}
inline int vprintf_s(Format format, std::span<const ArgValue> args) {
  return format_write("vprintf_s", standard_output(), format, args);
}
inline int vsnprintf_s(char* s, rsize_t n, Format format, std::span<const ArgValue> args) {
  return format_render_bounded("vsnprintf_s", s, n, format, args, true);
}
inline int vsprintf_s(char* s, rsize_t n, Format format, std::span<const ArgValue> args) {
  return format_render_bounded("vsprintf_s", s, n, format, args, false);
}
inline int vsscanf_s(const char* s, Format format, std::span<const ArgValue> outs) {
  if (s == nullptr) return scan_parse("vsscanf_s", nullptr, format, outs);
  StringSource source{std::string{s}};
  return scan_parse("vsscanf_s", &source, format, outs);
}
inline int vfscanf_s(ByteSource& stream, Format format, std::span<const ArgValue> outs) {
  return scan_parse("vfscanf_s", &stream, format, outs);
}
inline int vscanf_s(Format format, std::span<const ArgValue> outs) {
  return scan_parse("vscanf_s", &standard_input(), format, outs);
}

template <class... Ts>
int fprintf_s(ByteSink& stream, Format format, Ts&&... values) {
  const auto args = make_args(std::forward<Ts>(values)...);
  return format_write("fprintf_s", stream, format, args);
}
template <class... Ts>
int printf_s(Format format, Ts&&... values) {
  const auto args = make_args(std::forward<Ts>(values)...);
  return format_write("printf_s", standard_output(), format, args);
}
template <class... Ts>
int snprintf_s(char* s, rsize_t n, Format format, Ts&&... values) {
  const auto args = make_args(std::forward<Ts>(values)...);
  return format_render_bounded("snprintf_s", s, n, format, args, true);
}
template <class... Ts>
int sprintf_s(char* s, rsize_t n, Format format, Ts&&... values) {
  const auto args = make_args(std::forward<Ts>(values)...);
  return format_render_bounded("sprintf_s", s, n, format, args, false);
}
template <class... Ts>
int sscanf_s(const char* s, Format format, Ts&&... outs) {
  const auto args = make_args(std::forward<Ts>(outs)...);
  if (s == nullptr) return scan_parse("sscanf_s", nullptr, format, args);
  StringSource source{std::string{s}};
  return scan_parse("sscanf_s", &source, format, args);
}
template <class... Ts>
int fscanf_s(ByteSource& stream, Format format, Ts&&... outs) {
  const auto args = make_args(std::forward<Ts>(outs)...);
  return scan_parse("fscanf_s", &stream, format, args);
}
template <class... Ts>
int scanf_s(Format format, Ts&&... outs) {
  const auto args = make_args(std::forward<Ts>(outs)...);
  return scan_parse("scanf_s", &standard_input(), format, args);
}

}  // namespace saferc
