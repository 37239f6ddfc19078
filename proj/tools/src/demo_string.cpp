#include <array>
#include <cerrno>
#include <ostream>

#include "saferc/string.hpp"
#include "saferc_cli/demo.hpp"

namespace saferc::cli {
namespace {

const char* printable(const char* s) { return s != nullptr ? s : "(null)"; }

void print_token(std::ostream& out, const char* token, rsize_t remaining, const char* rest) {
  out << "strtok_s token: " << printable(token) << ", remaining length: " << remaining
      << ", remaining substring: " << printable(rest) << '\n';
}

}  // namespace

int run_string_demo(std::ostream& out) {
  // Both buffers live in one zeroed arena so that `buffer1 - 10` is a real
  // address for the overlap case.
  constexpr std::size_t kPad = 16;
  constexpr std::size_t kSize = 1024;
  std::array<char, kPad + 2 * kSize> arena{};
  char* const buffer1 = arena.data() + kPad;
  char* const buffer2 = buffer1 + kSize;

  // Failure tests
  out << "strcpy_s failure test:\t" << std::flush;
  strcpy_s(buffer1, 1024, nullptr);
  out << "strncpy_s failure test:\t" << std::flush;
  strncpy_s(buffer1, 10, buffer2, 50);
  out << "strncat_s failure test:\t" << std::flush;
  strcat_s(buffer1, static_cast<rsize_t>(-1), buffer2);
  out << "strncat_s failure test:\t" << std::flush;
  strncat_s(nullptr, 1024, nullptr, 50);
  out << "strncat_s failure test:\t" << std::flush;
  strncat_s(buffer1, 1024, buffer1 - 10, 50);
  out << "memcpy_s failure test:\t" << std::flush;
  memcpy_s(buffer1, 1024, buffer2, static_cast<rsize_t>(-1));
  out << "memmove_s failure test:\t" << std::flush;
  memmove_s(buffer1, 1023, nullptr, 1024);

  // Normal operation tests
  strcpy_s(buffer1, 1024, "test string");
  out << "strcpy_s: " << buffer1 << '\n';
  strncpy_s(buffer2, 1024, buffer1, 1024);
  out << "strncpy_s: " << buffer2 << '\n';
  strcat_s(buffer1, 1024, buffer2);
  out << "strcat_s: " << buffer1 << '\n';
  strncat_s(buffer1, 1024, buffer2, 50);
  out << "strncat_s: " << buffer1 << '\n';
  memmove_s(buffer2, 1024, buffer1, strnlen_s(buffer1, 1024) + 1);
  out << "memmove_s: " << buffer2 << '\n';
  memcpy_s(buffer2, 1024, buffer1, strnlen_s(buffer1, 1024) + 1);
  out << "memcpy_s: " << buffer2 << '\n';

  out << "strnlen_s(buffer1): " << strnlen_s(buffer1, 1024) << '\n';
  const std::size_t errlen = strerrorlen_s(EINVAL);
  out << "strerrorlen_s(EINVAL): " << errlen << '\n';
  strerror_s(buffer2, 1014, EINVAL);
  out << buffer2 << '\n';

  rsize_t l = strnlen_s(buffer1, 100);
  char* state = nullptr;
  char* token = strtok_s(buffer1, &l, " ", &state);
  print_token(out, token, l, state);
  token = strtok_s(nullptr, &l, "gt", &state);
  print_token(out, token, l, state);

  // The last token's terminator sits one past the character count, so this
  // bound is one short.
  out << std::flush;
  token = strtok_s(nullptr, &l, "#", &state);
  if (token == nullptr) {
    ++l;
    token = strtok_s(nullptr, &l, "#", &state);
  }
  print_token(out, token, l, state);

  const std::size_t s = strnlen_s("12345", 10);
  out << "size: " << s << '\n';
  return 0;
}

}  // namespace saferc::cli
