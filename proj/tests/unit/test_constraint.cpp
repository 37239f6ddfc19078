#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <iostream>
#include <thread>

#include "capture.hpp"
#include "doctest.h"
#include "saferc/constraint.hpp"
#include "saferc/string.hpp"

using namespace saferc;
using saferc::testing::Capture;

namespace {

std::atomic<int> g_calls{0};
void counting_a(std::string_view, const Violation&, ErrorCode) { ++g_calls; }
void counting_b(std::string_view, const Violation&, ErrorCode) { ++g_calls; }

}  // namespace

TEST_CASE("abort handler is the default") {
  CHECK(current_constraint_handler() == &abort_handler_s);
  const ConstraintHandler previous = set_constraint_handler_s(&ignore_handler_s);
  CHECK(previous == &abort_handler_s);
  CHECK(set_constraint_handler_s(nullptr) == &ignore_handler_s);
  CHECK(current_constraint_handler() == &abort_handler_s);
}

TEST_CASE("set_constraint_handler_s round-trips arbitrary handlers") {
  const ConstraintHandler handlers[] = {&counting_a, &counting_b, &ignore_handler_s, &abort_handler_s};
  for (auto x : handlers) {
    for (auto y : handlers) {
      set_constraint_handler_s(x);
      CHECK(set_constraint_handler_s(y) == x);
      CHECK(current_constraint_handler() == y);
    }
  }
  set_constraint_handler_s(nullptr);
}

TEST_CASE("validate_not_null") {
  Capture cap;
  CHECK(validate_not_null("strcpy_s", "s2", true) == 0);
  CHECK(cap.count() == 0);
  CHECK(validate_not_null("strcpy_s", "s2", false) == 1);
  CHECK(cap.last().message == "strcpy_s(): has invalid NULL pointer argument : s2");
  CHECK(validate_not_null("strncat_s", "s1", nullptr) == 1);
  CHECK(cap.last().message == "strncat_s(): has invalid NULL pointer argument : s1");
}

TEST_CASE("validate_value_in_range: exhaustive against the two-comparison oracle") {
  Capture cap;
  CHECK(validate_value_in_range("f", "v", 5, {1, 10}) == 0);
  CHECK(validate_value_in_range("f", "v", 0, {1, 10}) == 2);
  CHECK(validate_value_in_range("f", "v", 10, {1, 10}) == 0);
  for (std::size_t v = 0; v <= 20; ++v) {
    const bool inside = 3 <= v && v <= 7;
    CHECK(validate_value_in_range("f", "v", v, {3, 7}) == (inside ? 0 : 2));
  }
}

TEST_CASE("validate_not_zero and validate_rsize_limit boundaries") {
  Capture cap;
  CHECK(validate_not_zero("f", "n", 1) == 0);
  CHECK(validate_not_zero("f", "n", 0) == 7);
  CHECK(validate_not_zero("f", "n", kRsizeMax) == 0);

  CHECK(validate_rsize_limit("strcat_s", "s1max", static_cast<std::size_t>(-1)) == 6);
  CHECK(cap.last().message == "strcat_s(): rsize_t value exceeds RSIZE_MAX : s1max");
  CHECK(validate_rsize_limit("f", "n", kRsizeMax) == 0);
  CHECK(validate_rsize_limit("f", "n", kRsizeMax + 1) == 6);
}

TEST_CASE("validate_no_overlap") {
  Capture cap;
  const std::uintptr_t base = 4096;
  CHECK(validate_no_overlap("strncat_s", "s1", "s2", {base, 1024}, {base - 10, 50}) == 8);
  CHECK(cap.last().message == "strncat_s(): two data structures overlap in memory : s1 and s2");
  CHECK(validate_no_overlap("f", "a", "b", {0, 10}, {10, 10}) == 0);
  CHECK(validate_no_overlap("f", "a", "b", {7, 0}, {7, 0}) == 0);
}

TEST_CASE("report_token_end_not_found") {
  Capture cap;
  CHECK(report_token_end_not_found("strtok_s", "*ptr") == 10);
  CHECK(cap.last().message == "strtok_s(): token end not found within defined bounds : *ptr");
}

TEST_CASE("one handler call per violation, none on success") {
  Capture cap;
  char buf[16];
  CHECK(strcpy_s(buf, sizeof buf, "ok") == 0);
  CHECK(memcpy_s(buf, sizeof buf, "abc", 3) == 0);
  CHECK(cap.count() == 0);
  CHECK(cap.diagnostics().empty());

  CHECK(strcpy_s(buf, sizeof buf, nullptr) == 1);
  CHECK(cap.count() == 1);
  // Several possible failures; only the first is reported.
  CHECK(strncat_s(nullptr, static_cast<rsize_t>(-1), nullptr, 0) == 1);
  CHECK(cap.count() == 2);
}

TEST_CASE("validators are pure apart from reporting") {
  Capture cap;
  validate_no_overlap("f", "a", "b", {0, 5}, {2, 5});
  validate_no_overlap("f", "a", "b", {0, 5}, {2, 5});
  REQUIRE(cap.count() == 2);
  CHECK(cap.all()[0].violation == cap.all()[1].violation);
  CHECK(cap.all()[0].message == cap.all()[1].message);
}

TEST_CASE("ignore handler emits the line and lets the caller continue") {
  std::string diag;
  ScopedDiagnosticSink sink{[&](std::string_view line) { diag += line; }};
  ScopedConstraintHandler handler{&ignore_handler_s};
  char dest[1024];
  CHECK(strcpy_s(dest, 1024, nullptr) == 1);
  CHECK(diag == "strcpy_s(): has invalid NULL pointer argument : s2\n");
  CHECK(strcpy_s(dest, 1024, "after") == 0);
}

TEST_CASE("last error is per thread") {
  Capture cap;
  clear_last_error();
  CHECK(validate_not_zero("f", "n", 0) == 7);
  CHECK(last_error() == 7);

  ErrorCode seen_in_thread = -1;
  std::thread worker([&] {
    // Fresh slot in a new thread; default handler would abort, so record first.
    ScopedConstraintHandler h{&counting_a};
    seen_in_thread = last_error();
    validate_rsize_limit("f", "n", SIZE_MAX);
    seen_in_thread = seen_in_thread * 100 + last_error();
  });
  worker.join();
  CHECK(seen_in_thread == 6);
  CHECK(last_error() == 7);
}

TEST_CASE("report_violation ignores records without an error") {
  Capture cap;
  CHECK(report_violation(Violation{}) == 0);
  CHECK(cap.count() == 0);
}

TEST_CASE("default abort handler terminates with the abort status") {
  int pipefd[2];
  REQUIRE(pipe(pipefd) == 0);
  std::cout.flush();
  std::fflush(nullptr);
  const pid_t pid = fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    close(pipefd[0]);
    set_diagnostic_sink([fd = pipefd[1]](std::string_view line) {
      [[maybe_unused]] auto n = write(fd, line.data(), line.size());
    });
    set_constraint_handler_s(nullptr);
    char dest[8];
    strcpy_s(dest, sizeof dest, nullptr);
    _exit(0);  // not reached
  }
  close(pipefd[1]);
  std::string output;
  char chunk[256];
  for (ssize_t n; (n = read(pipefd[0], chunk, sizeof chunk)) > 0;) output.append(chunk, static_cast<std::size_t>(n));
  close(pipefd[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 134);
  CHECK(output == "strcpy_s(): has invalid NULL pointer argument : s2\n");
}

TEST_CASE("abort status is configurable") {
  std::cout.flush();
  std::fflush(nullptr);
  const pid_t pid = fork();
  REQUIRE(pid >= 0);
  if (pid == 0) {
    set_diagnostic_sink([](std::string_view) {});
    set_abort_status(3);
    set_constraint_handler_s(nullptr);
    validate_not_zero("f", "n", 0);
    _exit(0);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
}
