#include <string>

#include "saferc/constraint.hpp"
#include "saferc/stdio.hpp"

namespace saferc {
namespace {

bool is_space(int c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

int digit_value(int c, unsigned base) noexcept {
  int v = -1;
  if (c >= '0' && c <= '9') v = c - '0';
  if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
  if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
  return v >= 0 && static_cast<unsigned>(v) < base ? v : -1;
}

ErrorCode report_format(std::string_view function, ErrorKind kind, std::string detail) {
  return report_violation(Violation{kind, std::string{function}, "format", std::nullopt, std::move(detail)});
}

// Up-front check of the directive list and slot kinds, before any input is read.
ErrorCode validate_scan(std::string_view function, std::span<const FormatItem> items,
                        std::span<const ArgValue> outs) {
  std::size_t slot = 0;
  for (const auto& item : items) {
    const auto* d = std::get_if<Directive>(&item);
    if (d == nullptr) continue;
    const char conv = d->conversion;
    if (conv == 'n') return report_format(function, ErrorKind::InvalidFormatParameterN, "%n");
  }
  for (const auto& item : items) {
    const auto* d = std::get_if<Directive>(&item);
    if (d == nullptr) continue;
    const char conv = d->conversion;
    const bool plain = !d->flags.any() && !d->width.is_from_arg() && d->precision.is_none() &&
                       d->length == LengthModifier::None;
    const bool supported = conv == 'd' || conv == 'u' || conv == 'x' || conv == 's' || conv == 'c' || conv == '%';
    if (!plain || !supported) return report_format(function, ErrorKind::InvalidFormatParameterN, "malformed");
    if (conv == '%') continue;
    if (slot >= outs.size()) return report_format(function, ErrorKind::InvalidFormatParameterN, "malformed");

    const ArgValue& out = outs[slot++];
    const std::string null_detail = std::string{"NULL argument for %"} + conv;
    if (conv == 's' || conv == 'c') {
      const auto* buf = std::get_if<arg::OutBuffer>(&out);
      if (buf == nullptr) return report_format(function, ErrorKind::InvalidFormatParameterN, "malformed");
      if (buf->data == nullptr) return report_format(function, ErrorKind::InvalidFormatParameterS, null_detail);
      if (ErrorCode rc = validate_rsize_limit(function, "capacity", buf->capacity)) return rc;
    } else {
      const auto* target = std::get_if<arg::IntSlot>(&out);
      if (target == nullptr) return report_format(function, ErrorKind::InvalidFormatParameterN, "malformed");
      if (target->target == nullptr) return report_format(function, ErrorKind::InvalidFormatParameterS, null_detail);
    }
  }
  if (slot != outs.size()) return report_format(function, ErrorKind::InvalidFormatParameterN, "malformed");
  return kOk;
}

class Scanner {
 public:
  Scanner(std::string_view function, ByteSource& in) : function_(function), in_(in) {}

  int run(std::span<const FormatItem> items, std::span<const ArgValue> outs) {
    std::size_t slot = 0;
    for (const auto& item : items) {
      if (const auto* lit = std::get_if<Literal>(&item)) {
        if (!match_literal(lit->text)) break;
        continue;
      }
      const auto& d = std::get<Directive>(item);
      const std::size_t width = d.width.is_fixed() && d.width.value > 0
                                    ? static_cast<std::size_t>(d.width.value)
                                    : SIZE_MAX;
      bool ok = false;
      switch (d.conversion) {
        case '%':
          skip_space();
          ok = in_.peek() == '%';
          if (ok) in_.get();
          break;
        case 'd':
        case 'u':
          ok = scan_integer(width, 10, std::get<arg::IntSlot>(outs[slot++]));
          break;
        case 'x':
          ok = scan_integer(width, 16, std::get<arg::IntSlot>(outs[slot++]));
          break;
        case 's':
          ok = scan_string(width, std::get<arg::OutBuffer>(outs[slot++]));
          break;
        case 'c':
          ok = scan_chars(d.width.is_fixed() && d.width.value > 0 ? width : 1,
                          std::get<arg::OutBuffer>(outs[slot++]));
          break;
        default:
          break;
      }
      if (!ok) break;
      if (d.conversion != '%') ++assigned_;
    }
    return assigned_;
  }

 private:
  void skip_space() {
    while (is_space(in_.peek())) in_.get();
  }

  bool match_literal(std::string_view text) {
    for (char c : text) {
      if (is_space(static_cast<unsigned char>(c))) {
        skip_space();
        continue;
      }
      if (in_.peek() != static_cast<unsigned char>(c)) return false;
      in_.get();
    }
    return true;
  }

  bool scan_integer(std::size_t width, unsigned base, arg::IntSlot slot) {
    skip_space();
    std::size_t used = 0;
    bool negative = false;
    if (used < width && (in_.peek() == '-' || in_.peek() == '+')) {
      negative = in_.get() == '-';
      ++used;
    }
    std::uint64_t value = 0;
    std::size_t digits = 0;
    if (base == 16 && used < width && in_.peek() == '0') {
      in_.get();
      ++used;
      ++digits;
      if (used < width && (in_.peek() == 'x' || in_.peek() == 'X')) {
        in_.get();
        ++used;
      }
    }
    while (used < width) {
      const int v = digit_value(in_.peek(), base);
      if (v < 0) break;
      in_.get();
      ++used;
      ++digits;
      value = value * base + static_cast<unsigned>(v);
    }
    if (digits == 0) return false;
    if (negative) value = 0 - value;
    *slot.target = static_cast<long long>(value);
    return true;
  }

  bool scan_string(std::size_t width, arg::OutBuffer buf) {
    skip_space();
    std::size_t len = 0;
    while (len < width) {
      const int c = in_.peek();
      if (c == ByteSource::kEnd || is_space(c)) break;
      in_.get();
      if (buf.capacity != 0 && len < buf.capacity - 1) buf.data[len] = static_cast<char>(c);
      ++len;
    }
    if (len == 0) return false;
    if (buf.capacity == 0 || len > buf.capacity - 1) {
      if (buf.capacity != 0) buf.data[0] = '\0';
      report_kind(ErrorKind::ParameterOutOfRange, function_, "capacity");
      return false;
    }
    buf.data[len] = '\0';
    return true;
  }

  bool scan_chars(std::size_t count, arg::OutBuffer buf) {
    if (buf.capacity < count) {
      if (buf.capacity != 0) buf.data[0] = '\0';
      report_kind(ErrorKind::ParameterOutOfRange, function_, "capacity");
      return false;
    }
    std::string taken;
    while (taken.size() < count && in_.peek() != ByteSource::kEnd) {
      taken += static_cast<char>(in_.get());
    }
    if (taken.size() < count) return false;
    taken.copy(buf.data, count);
    return true;
  }

  std::string_view function_;
  ByteSource& in_;
  int assigned_ = 0;
};

}  // namespace

int scan_parse(std::string_view function_name, ByteSource* source, Format format,
               std::span<const ArgValue> outs) {
  if (ErrorCode rc = validate_not_null(function_name, "s", source)) return -rc;
  if (ErrorCode rc = validate_not_null(function_name, "format", format.has_value())) return -rc;
  const auto items = parse_directives(*format);
  if (!items) return -report_format(function_name, ErrorKind::InvalidFormatParameterN, "malformed");
  if (ErrorCode rc = validate_scan(function_name, items.value(), outs)) return -rc;
  return Scanner{function_name, *source}.run(items.value(), outs);
}

}  // namespace saferc
