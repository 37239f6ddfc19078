#include <cstring>
#include <string>

#include "saferc/constraint.hpp"
#include "saferc/string.hpp"

namespace saferc {
namespace {

std::string message_text(ErrorCode errnum) {
  ErrorKind kind{};
  if (kind_from_code(errnum, kind)) return std::string{message_for(kind)};
  return "Unknown error " + std::to_string(errnum);
}

}  // namespace

std::size_t strerrorlen_s(ErrorCode errnum) noexcept {
  ErrorKind kind{};
  if (kind_from_code(errnum, kind)) return message_for(kind).size();
  // "Unknown error " plus the decimal rendering.
  return 14 + std::to_string(errnum).size();
}

ErrorCode strerror_s(char* s, rsize_t maxsize, ErrorCode errnum) {
  constexpr std::string_view fn = "strerror_s";
  if (ErrorCode rc = validate_not_null(fn, "s", s)) return rc;
  if (ErrorCode rc = validate_rsize_limit(fn, "maxsize", maxsize)) return rc;
  if (ErrorCode rc = validate_not_zero(fn, "maxsize", maxsize)) return rc;

  const std::string msg = message_text(errnum);
  if (msg.size() < maxsize) {
    std::memcpy(s, msg.c_str(), msg.size() + 1);
    return kOk;
  }

  if (maxsize > 3) {
    const std::size_t keep = maxsize - 4;
    std::memcpy(s, msg.data(), keep);
    std::memcpy(s + keep, "...", 4);
  } else {
    std::memcpy(s, msg.data(), maxsize - 1);
    s[maxsize - 1] = '\0';
  }
  return record_status(code_of(ErrorKind::ParameterOutOfRange));
}

}  // namespace saferc
