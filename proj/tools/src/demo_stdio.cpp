#include <ostream>

#include "saferc/stdio.hpp"
#include "saferc_cli/demo.hpp"

namespace saferc::cli {
namespace {

// printf_s bound to the demo's output stream.
class Printer {
 public:
  explicit Printer(std::ostream& out) : out_(out), sink_(out) {}

  template <class... Ts>
  int operator()(std::string_view format, Ts&&... values) {
    const auto args = make_args(std::forward<Ts>(values)...);
    const int rc = format_write("printf_s", sink_, format, args);
    out_.flush();
    return rc;
  }

 private:
  std::ostream& out_;
  StreamSink sink_;
};

}  // namespace

int run_stdio_demo(std::ostream& out) {
  Printer printf_s{out};
  long long count = 0;
  const arg::IntSlot slot{&count};

  printf_s("valid s = [%s]\n", "valid");
  printf_s("  valid n1 = [%%n]\n");
  printf_s("invalid n2 = [%n]\n", slot);
  printf_s("  valid n3 = [%%%%n]\n");
  printf_s("invalid n4 = [%%%n]\n", slot);

  printf_s("invalid s = [%s]\n", nullptr);
  printf_s("invalid n = [%n]\n", slot);

  const int n_result = printf_s("%n", slot);
  out << "return value for %n: " << n_result << '\n';
  const int s_result = printf_s("%s", nullptr);
  out << "return value for NULL %s: " << s_result << '\n';
  out.flush();
  return 0;
}

}  // namespace saferc::cli
