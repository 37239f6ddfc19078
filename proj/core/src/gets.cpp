#include "saferc/constraint.hpp"
#include "saferc/stdio.hpp"

namespace saferc {

std::optional<std::string_view> gets_s(char* s, rsize_t n, ByteSource& source) {
  constexpr std::string_view fn = "gets_s";
  if (validate_not_null(fn, "s", s)) return std::nullopt;
  if (validate_rsize_limit(fn, "n", n)) return std::nullopt;
  if (validate_not_zero(fn, "n", n)) return std::nullopt;

  std::size_t len = 0;
  for (;;) {
    const int c = source.get();
    if (c == ByteSource::kEnd) {
      if (len == 0) {
        s[0] = '\0';
        return std::nullopt;
      }
      break;
    }
    if (c == '\n') break;
    if (len == n - 1) {
      // Line does not fit: drop the remainder so the next read starts fresh.
      for (int rest = source.get(); rest != ByteSource::kEnd && rest != '\n'; rest = source.get()) {
      }
      s[0] = '\0';
      report_kind(ErrorKind::ParameterOutOfRange, fn, "n");
      return std::nullopt;
    }
    s[len++] = static_cast<char>(c);
  }
  s[len] = '\0';
  return std::string_view{s, len};
}

std::optional<std::string_view> gets_s(char* s, rsize_t n) { return gets_s(s, n, standard_input()); }

}  // namespace saferc
