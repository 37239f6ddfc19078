#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/string.hpp"

namespace saferc {
namespace {

ErrorCode fail_memory(void* s1, rsize_t s1max, ErrorCode rc) noexcept {
  if (s1 != nullptr && within_rsize_max(s1max)) std::memset(s1, 0, s1max);
  return rc;
}

// Checks shared by memcpy_s and memmove_s, in engine order.
ErrorCode check_copy(std::string_view fn, void* s1, rsize_t s1max, const void* s2, rsize_t n) {
  if (ErrorCode rc = validate_not_null(fn, "s1", s1)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "s2", s2)) return fail_memory(s1, s1max, rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "s1max", s1max)) return rc;
  if (ErrorCode rc = validate_rsize_limit(fn, "n", n)) return fail_memory(s1, s1max, rc);
  if (n > s1max) return fail_memory(s1, s1max, report_kind(ErrorKind::ParameterOutOfRange, fn, "n"));
  return kOk;
}

}  // namespace

ErrorCode memcpy_s(void* s1, rsize_t s1max, const void* s2, rsize_t n) {
  constexpr std::string_view fn = "memcpy_s";
  if (ErrorCode rc = check_copy(fn, s1, s1max, s2, n)) return rc;
  if (ErrorCode rc = validate_no_overlap(fn, "s1", "s2", MemRegion::of(s1, n), MemRegion::of(s2, n))) {
    return fail_memory(s1, s1max, rc);
  }
  if (n != 0) std::memcpy(s1, s2, n);
  return kOk;
}

ErrorCode memmove_s(void* s1, rsize_t s1max, const void* s2, rsize_t n) {
  if (ErrorCode rc = check_copy("memmove_s", s1, s1max, s2, n)) return rc;
  if (n != 0) std::memmove(s1, s2, n);
  return kOk;
}

}  // namespace saferc
