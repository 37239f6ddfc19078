#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "saferc/error.hpp"

namespace saferc {

// ---------------------------------------------------------------------------
// Directive model
//
//   % flags* width? ('.' precision)? length? conversion
//
//   flags      - + space # 0
//   width      digits | *
//   precision  digits | *   (empty digits mean 0)
//   length     hh h l ll j z t L
//   conversion d i o u x X f F e E g G a A c s p n %
// ---------------------------------------------------------------------------

enum class LengthModifier : std::uint8_t { None, hh, h, l, ll, j, z, t, L };

struct Flags {
  bool left = false;   // '-'
  bool plus = false;   // '+'
  bool space = false;  // ' '
  bool alt = false;    // '#'
  bool zero = false;   // '0'

  bool any() const noexcept { return left || plus || space || alt || zero; }
  friend bool operator==(const Flags&, const Flags&) = default;
};

/// Width or precision field.
struct Amount {
  enum class Kind : std::uint8_t { None, Fixed, FromArg };
  Kind kind = Kind::None;
  int value = 0;

  static constexpr Amount none() noexcept { return {}; }
  static constexpr Amount fixed(int n) noexcept { return {Kind::Fixed, n}; }
  static constexpr Amount from_arg() noexcept { return {Kind::FromArg, 0}; }

  bool is_none() const noexcept { return kind == Kind::None; }
  bool is_fixed() const noexcept { return kind == Kind::Fixed; }
  bool is_from_arg() const noexcept { return kind == Kind::FromArg; }
  friend bool operator==(const Amount&, const Amount&) = default;
};

/// Byte offsets [offset, offset + length) into the parsed format string.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Literal {
  std::string text;
  SourceSpan span;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Directive {
  Flags flags;
  Amount width;
  Amount precision;
  LengthModifier length = LengthModifier::None;
  char conversion = '\0';
  SourceSpan span;

  /// Number of arguments this directive reads (star fields plus the value).
  std::size_t args_consumed() const noexcept;
  friend bool operator==(const Directive&, const Directive&) = default;
};

using FormatItem = std::variant<Literal, Directive>;

/// Source text of `item` within the format it was parsed from.
std::string_view source_text(std::string_view format, const FormatItem& item) noexcept;

struct FormatError {
  enum class Kind : std::uint8_t { MalformedDirective, ArgCountMismatch, ArgTypeMismatch };
  Kind kind = Kind::MalformedDirective;
  std::size_t offset = 0;
  std::string description;
};

std::string_view to_string(FormatError::Kind kind) noexcept;

/// Either a value or a FormatError.
template <class T>
class FormatResult {
 public:
  FormatResult(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  FormatResult(FormatError error) : state_(std::move(error)) {}  // NOLINT

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T& value() & { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }
  const FormatError& error() const& { return std::get<FormatError>(state_); }

 private:
  std::variant<T, FormatError> state_;
};

// ---------------------------------------------------------------------------
// Arguments: a typed replacement for a C va_list.
// ---------------------------------------------------------------------------

namespace arg {

struct Signed {
  std::int64_t value = 0;
};
struct Unsigned {
  std::uint64_t value = 0;
};
struct Float {
  double value = 0.0;
};
struct Char {
  unsigned char value = 0;
};
/// A C string argument; nullopt models a null pointer.
struct Str {
  std::optional<std::string_view> text;
};
/// Caller-owned destination for scanned text, with its declared capacity.
struct OutBuffer {
  char* data = nullptr;
  std::size_t capacity = 0;
};
/// Destination for a scanned integer (or the target a %n would write).
struct IntSlot {
  long long* target = nullptr;
};
struct Address {
  std::uintptr_t value = 0;
};

}  // namespace arg

using ArgValue = std::variant<arg::Signed, arg::Unsigned, arg::Float, arg::Char, arg::Str,
                              arg::OutBuffer, arg::IntSlot, arg::Address>;

/// Converts ordinary C++ values into ArgValue: signed/unsigned integers, char,
/// floating point, C strings (nullptr is an absent string), string views,
/// long long* (as a scan slot), other pointers (as addresses) and the arg::
/// structs themselves.
namespace detail {
template <class T, class V>
struct is_alternative;
template <class T, class... Ts>
struct is_alternative<T, std::variant<Ts...>> : std::disjunction<std::is_same<T, Ts>...> {};
}  // namespace detail

template <class T>
ArgValue make_arg(T&& value) {
  using U = std::remove_cvref_t<T>;
  if constexpr (std::is_same_v<U, ArgValue>) {
    return value;
  } else if constexpr (detail::is_alternative<U, ArgValue>::value) {
    return ArgValue{std::in_place_type<U>, std::forward<T>(value)};
  } else if constexpr (std::is_same_v<U, char>) {
    return arg::Char{static_cast<unsigned char>(value)};
  } else if constexpr (std::is_same_v<U, bool>) {
    return arg::Signed{value ? 1 : 0};
  } else if constexpr (std::is_integral_v<U> && std::is_signed_v<U>) {
    return arg::Signed{static_cast<std::int64_t>(value)};
  } else if constexpr (std::is_integral_v<U>) {
    return arg::Unsigned{static_cast<std::uint64_t>(value)};
  } else if constexpr (std::is_floating_point_v<U>) {
    return arg::Float{static_cast<double>(value)};
  } else if constexpr (std::is_same_v<U, std::nullptr_t>) {
    return arg::Str{std::nullopt};
  } else if constexpr (std::is_convertible_v<U, const char*>) {
    const char* s = value;
    return s ? arg::Str{std::string_view{s}} : arg::Str{std::nullopt};
  } else if constexpr (std::is_convertible_v<U, std::string_view>) {
    return arg::Str{std::string_view{value}};
  } else if constexpr (std::is_same_v<U, long long*>) {
    return arg::IntSlot{value};  // scan target
  } else if constexpr (std::is_pointer_v<U>) {
    return arg::Address{reinterpret_cast<std::uintptr_t>(value)};
  } else {
    static_assert(!sizeof(U), "unsupported argument type");
  }
}

template <class... Ts>
std::vector<ArgValue> make_args(Ts&&... values) {
  return std::vector<ArgValue>{make_arg(std::forward<Ts>(values))...};
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Single-pass tokenization. "%%" yields a '%' directive; an unknown
/// conversion, a trailing lone '%', or a field that overflows int is a
/// MalformedDirective located at the directive's '%'.
FormatResult<std::vector<FormatItem>> parse_directives(std::string_view format);

/// Total arguments read by `items` (star widths/precisions plus values).
std::size_t args_consumed(std::span<const FormatItem> items) noexcept;

/// Rejects any n-conversion (and malformed formats) with kind 5.
ErrorCode validate_format_n(std::string_view function, std::string_view format);

/// Rejects an absent format (kind 1) and any s-conversion whose argument is an
/// absent string (kind 4). A format that does not parse is kind 5 ("malformed").
ErrorCode validate_format_s(std::string_view function, std::optional<std::string_view> format,
                            std::span<const ArgValue> args);

/// C99 formatted-output semantics over the typed argument list. Argument count
/// must match exactly; mismatched kinds are ArgTypeMismatch.
FormatResult<std::string> render(std::span<const FormatItem> items, std::span<const ArgValue> args);

}  // namespace saferc
