#include <array>
#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/stdlib.hpp"

namespace saferc {
namespace {

constexpr std::array<const char*, 7> kDays{"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
constexpr std::array<const char*, 12> kMonths{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                              "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

bool in(int v, int lo, int hi) noexcept { return lo <= v && v <= hi; }

}  // namespace

bool is_valid(const BrokenTime& t) noexcept {
  return in(t.sec, 0, 60) && in(t.min, 0, 59) && in(t.hour, 0, 23) && in(t.mday, 1, 31) &&
         in(t.mon, 0, 11) && in(t.wday, 0, 6) && in(t.yday, 0, 365) &&
         in(t.year, 1000 - 1900, 9999 - 1900);
}

ErrorCode asctime_s(char* s, rsize_t maxsize, const BrokenTime* timeptr) {
  constexpr std::string_view fn = "asctime_s";
  const auto fail = [&](ErrorCode rc) {
    if (s != nullptr && maxsize != 0 && within_rsize_max(maxsize)) s[0] = '\0';
    return rc;
  };

  if (ErrorCode rc = validate_not_null(fn, "s", s)) return rc;
  if (ErrorCode rc = validate_not_null(fn, "timeptr", timeptr)) return fail(rc);
  if (ErrorCode rc = validate_rsize_limit(fn, "maxsize", maxsize)) return rc;
  if (ErrorCode rc = validate_value_in_range(fn, "maxsize", maxsize, ValueRange{kAsctimeLength + 1, kRsizeMax})) {
    return fail(rc);
  }
  if (!is_valid(*timeptr)) return fail(report_kind(ErrorKind::ParameterOutOfRange, fn, "timeptr"));

  const BrokenTime& t = *timeptr;
  // Www Mmm dd hh:mm:ss yyyy\n
  char* out = s;
  const auto put = [&](const char* text, std::size_t n) {
    std::memcpy(out, text, n);
    out += n;
  };
  const auto put_digits = [&](int value, int width, char pad) {
    char digits[4];
    for (int i = width - 1; i >= 0; --i) {
      digits[i] = static_cast<char>('0' + value % 10);
      value /= 10;
    }
    if (pad != '0' && digits[0] == '0') digits[0] = pad;
    put(digits, static_cast<std::size_t>(width));
  };

  put(kDays[static_cast<std::size_t>(t.wday)], 3);
  put(" ", 1);
  put(kMonths[static_cast<std::size_t>(t.mon)], 3);
  put(" ", 1);
  put_digits(t.mday, 2, ' ');
  put(" ", 1);
  put_digits(t.hour, 2, '0');
  put(":", 1);
  put_digits(t.min, 2, '0');
  put(":", 1);
  put_digits(t.sec, 2, '0');
  put(" ", 1);
  put_digits(1900 + t.year, 4, '0');
  put("\n", 2);  // newline plus terminator
  return kOk;
}

}  // namespace saferc
