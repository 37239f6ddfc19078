#include "saferc/error.hpp"

#include <array>

namespace saferc {
namespace {

struct KindInfo {
  std::string_view name;
  std::string_view message;
};

// Indexed by numeric code.
constexpr std::array<KindInfo, kErrorKindCount> kKindTable{{
    {"E_NOERROR", ""},
    {"E_NULL_PARAMETER_NOT_ALLOWED", "has invalid NULL pointer argument"},
    {"E_PARAMETER_OUT_OF_RANGE", "parameter out of range"},
    {"E_ENVIRONMENTAL_LIMIT_NOT_MET", "environmental limit not met"},
    {"E_INVALID_FORMAT_PARAMETER_S", "invalid format parameter (%s)"},
    {"E_INVALID_FORMAT_PARAMETER_N", "invalid format parameter (%n)"},
    {"E_RSIZE_MAX_EXCEEDED", "rsize_t value exceeds RSIZE_MAX"},
    {"E_NOT_ZERO", "parameter must not be zero"},
    {"E_OBJECTS_OVERLAP", "two data structures overlap in memory"},
    {"E_NOT_IMPLEMENTED", "not implemented"},
    {"E_TOKEN_END_NOT_FOUND", "token end not found within defined bounds"},
}};

}  // namespace

bool kind_from_code(ErrorCode code, ErrorKind& out) noexcept {
  if (code < 0 || code >= kErrorKindCount) return false;
  out = static_cast<ErrorKind>(code);
  return true;
}

std::string_view message_for(ErrorKind kind) noexcept {
  const auto index = static_cast<std::size_t>(code_of(kind));
  return index < kKindTable.size() ? kKindTable[index].message : std::string_view{};
}

std::string_view name_of(ErrorKind kind) noexcept {
  const auto index = static_cast<std::size_t>(code_of(kind));
  return index < kKindTable.size() ? kKindTable[index].name : std::string_view{"E_UNKNOWN"};
}

}  // namespace saferc
