#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace saferc {

/// Restricted size: any value above kRsizeMax is treated as a runtime-constraint
/// violation. Negative sizes cast to unsigned land above the limit.
using rsize_t = std::size_t;

inline constexpr rsize_t kRsizeMax = SIZE_MAX >> 1;

constexpr bool within_rsize_max(std::size_t value) noexcept { return value <= kRsizeMax; }

/// Error status returned by every checked operation; 0 means success, otherwise
/// the numeric code of the first ErrorKind detected.
using ErrorCode = int;

inline constexpr ErrorCode kOk = 0;

/// Most common runtime-constraint failures. The numeric values are part of the
/// public contract and index the message table.
enum class ErrorKind : int {
  NoError = 0,
  NullParameterNotAllowed = 1,
  ParameterOutOfRange = 2,
  EnvironmentalLimitNotMet = 3,
  InvalidFormatParameterS = 4,
  InvalidFormatParameterN = 5,
  RsizeMaxExceeded = 6,
  NotZero = 7,
  ObjectsOverlap = 8,
  NotImplemented = 9,
  TokenEndNotFound = 10,
};

inline constexpr int kErrorKindCount = 11;

constexpr ErrorCode code_of(ErrorKind kind) noexcept { return static_cast<ErrorCode>(kind); }

/// Maps a numeric code back to its kind. Returns false for codes outside 0..10.
bool kind_from_code(ErrorCode code, ErrorKind& out) noexcept;

/// Fixed description fragment used in diagnostic lines. Empty for NoError.
std::string_view message_for(ErrorKind kind) noexcept;

/// Symbolic name, e.g. "E_OBJECTS_OVERLAP".
std::string_view name_of(ErrorKind kind) noexcept;

}  // namespace saferc
