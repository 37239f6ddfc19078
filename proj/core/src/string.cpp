#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/string.hpp"

namespace saferc {
namespace {

bool usable_capacity(rsize_t s1max) noexcept { return s1max != 0 && within_rsize_max(s1max); }

// Empties the destination after a violation when it can be written safely.
ErrorCode fail_string(char* s1, rsize_t s1max, ErrorCode rc) noexcept {
  if (s1 != nullptr && usable_capacity(s1max)) s1[0] = '\0';
  return rc;
}

}  // namespace

std::size_t strnlen_s(const char* s, std::size_t maxsize) noexcept {
  if (s == nullptr) return 0;
  const void* nul = std::memchr(s, '\0', maxsize);
  return nul == nullptr ? maxsize : static_cast<std::size_t>(static_cast<const char*>(nul) - s);
}

ErrorCode strcpy_s(char* s1, rsize_t s1max, const char* s2) {
  constexpr std::string_view fn = "strcpy_s";
  if (ErrorCode rc = validate_not_null(fn, "s1", s1)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "s2", s2)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "s1max", s1max)) return rc;
  if (ErrorCode rc = validate_not_zero(fn, "s1max", s1max)) return rc;

  const std::size_t len = strnlen_s(s2, s1max);
  if (len >= s1max) {
    return fail_string(s1, s1max, report_kind(ErrorKind::ParameterOutOfRange, fn, "s1max"));
  }
  if (ErrorCode rc = validate_no_overlap(fn, "s1", "s2", MemRegion::of(s1, s1max),
                                         MemRegion::of(s2, len + 1))) {
    return fail_string(s1, s1max, rc);
  }

  std::memcpy(s1, s2, len + 1);
  return kOk;
}

ErrorCode strncpy_s(char* s1, rsize_t s1max, const char* s2, rsize_t n) {
  constexpr std::string_view fn = "strncpy_s";
  if (ErrorCode rc = validate_not_null(fn, "s1", s1)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "s2", s2)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "s1max", s1max)) return rc;
  if (ErrorCode rc = validate_rsize_limit(fn, "n", n)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_not_zero(fn, "s1max", s1max)) return rc;

  // Copying stops at n bytes, so only n >= s1max needs a terminator within s1max.
  if (n >= s1max && strnlen_s(s2, s1max) >= s1max) {
    return fail_string(s1, s1max, report_kind(ErrorKind::ParameterOutOfRange, fn, "s1max"));
  }
  if (ErrorCode rc = validate_no_overlap(fn, "s1", "s2", MemRegion::of(s1, s1max),
                                         MemRegion::of(s2, n))) {
    return fail_string(s1, s1max, rc);
  }

  const std::size_t len = strnlen_s(s2, n);
  std::memcpy(s1, s2, len);
  s1[len] = '\0';
  return kOk;
}

ErrorCode strcat_s(char* s1, rsize_t s1max, const char* s2) {
  constexpr std::string_view fn = "strcat_s";
  if (ErrorCode rc = validate_not_null(fn, "s1", s1)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "s2", s2)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "s1max", s1max)) return rc;
  if (ErrorCode rc = validate_not_zero(fn, "s1max", s1max)) return rc;

  const std::size_t used = strnlen_s(s1, s1max);
  const std::size_t room = s1max - used;
  // No terminator within s1max: nothing left to append into.
  if (ErrorCode rc = validate_not_zero(fn, "s1", room)) return fail_string(s1, s1max, rc);

  const std::size_t len = strnlen_s(s2, room);
  if (len >= room) {
    return fail_string(s1, s1max, report_kind(ErrorKind::ParameterOutOfRange, fn, "s1max"));
  }
  if (ErrorCode rc = validate_no_overlap(fn, "s1", "s2", MemRegion::of(s1, s1max),
                                         MemRegion::of(s2, len + 1))) {
    return fail_string(s1, s1max, rc);
  }

  std::memcpy(s1 + used, s2, len + 1);
  return kOk;
}

ErrorCode strncat_s(char* s1, rsize_t s1max, const char* s2, rsize_t n) {
  constexpr std::string_view fn = "strncat_s";
  if (ErrorCode rc = validate_not_null(fn, "s1", s1)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "s2", s2)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "s1max", s1max)) return rc;
  if (ErrorCode rc = validate_rsize_limit(fn, "n", n)) return fail_string(s1, s1max, rc);
  if (ErrorCode rc = validate_not_zero(fn, "s1max", s1max)) return rc;

  const std::size_t used = strnlen_s(s1, s1max);
  const std::size_t room = s1max - used;
  if (ErrorCode rc = validate_not_zero(fn, "s1", room)) return fail_string(s1, s1max, rc);

  if (n >= room && strnlen_s(s2, room) >= room) {
    return fail_string(s1, s1max, report_kind(ErrorKind::ParameterOutOfRange, fn, "s1max"));
  }
  if (ErrorCode rc = validate_no_overlap(fn, "s1", "s2", MemRegion::of(s1, s1max),
                                         MemRegion::of(s2, n))) {
    return fail_string(s1, s1max, rc);
  }

  const std::size_t len = strnlen_s(s2, n);
  std::memcpy(s1 + used, s2, len);
  s1[used + len] = '\0';
  return kOk;
}

}  // namespace saferc
