#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/string.hpp"

namespace saferc {

// The scan window is p[0, *s1max). A token ends at the next occurrence of the
// delimiter sequence or at the terminator; either must lie inside the window.
// Afterwards *s1max is the number of window bytes not yet examined.
char* strtok_s(char* s1, rsize_t* s1max, const char* s2, char** ptr) {
  constexpr std::string_view fn = "strtok_s";
  if (validate_not_null(fn, "s1max", s1max)) return nullptr;
  if (validate_not_null(fn, "s2", s2)) return nullptr;
  if (validate_not_null(fn, "ptr", ptr)) return nullptr;
  if (s1 == nullptr && validate_not_null(fn, "*ptr", *ptr)) return nullptr;
  if (validate_rsize_limit(fn, "*s1max", *s1max)) return nullptr;

  char* const p = s1 != nullptr ? s1 : *ptr;
  const std::size_t window = *s1max;
  const std::size_t dlen = std::strlen(s2);

  const auto delimiter_at = [&](std::size_t i) {
    return dlen != 0 && dlen <= window - i && std::memcmp(p + i, s2, dlen) == 0;
  };

  std::size_t i = 0;
  for (;;) {
    // Only delimiters inside the window: nothing left to tokenize.
    if (i >= window) {
      *ptr = p + window;
      *s1max = 0;
      return nullptr;
    }
    if (p[i] == '\0') {
      *ptr = p + i;
      *s1max = window - i - 1;
      return nullptr;
    }
    if (!delimiter_at(i)) break;
    i += dlen;
  }

  const std::size_t start = i;
  for (;; ++i) {
    if (i >= window) {
      report_token_end_not_found(fn, "*ptr");
      return nullptr;
    }
    if (p[i] == '\0') {
      // The terminator counts as searched; *ptr stays on it.
      *ptr = p + i;
      *s1max = window - i - 1;
      return p + start;
    }
    if (delimiter_at(i)) {
      p[i] = '\0';
      *ptr = p + i + dlen;
      *s1max = window - i - dlen;
      return p + start;
    }
  }
}

}  // namespace saferc
