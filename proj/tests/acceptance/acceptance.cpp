// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit if any
// criterion fails. Limits are fixed here and printed with each result.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "saferc/saferc.hpp"
#include "saferc_cli/demo.hpp"

using namespace saferc;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int g_handler_calls = 0;
void counting_handler(std::string_view, const Violation&, ErrorCode) { ++g_handler_calls; }

// Silences diagnostics and counts handler calls for the current scope.
struct Quiet {
  ScopedDiagnosticSink sink{[](std::string_view) {}};
  ScopedConstraintHandler handler{&counting_handler};
  Quiet() { g_handler_calls = 0; }
};

std::string string_transcript() {
  std::ostringstream out;
  ScopedDiagnosticSink sink{[&](std::string_view line) { out << line; }};
  ScopedConstraintHandler handler{&ignore_handler_s};
  cli::run_string_demo(out);
  return out.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in{text};
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

Verdict ac1_string_transcript() {
  const std::string text = string_transcript();
  static const char* const kDiagnostics[] = {
      "strcpy_s(): has invalid NULL pointer argument : s2",
      "strcat_s(): rsize_t value exceeds RSIZE_MAX : s1max",
      "strncat_s(): has invalid NULL pointer argument : s1",
      "strncat_s(): two data structures overlap in memory : s1 and s2",
      "memcpy_s(): rsize_t value exceeds RSIZE_MAX : n",
      "memmove_s(): has invalid NULL pointer argument : s2",
      "strtok_s(): token end not found within defined bounds : *ptr",
  };
  std::size_t at = 0;
  int found = 0;
  for (const char* d : kDiagnostics) {
    const std::string line = std::string{d} + "\n";
    const std::size_t hit = text.find(line, at);
    if (hit == std::string::npos || (hit != 0 && text[hit - 1] != '\n' && text[hit - 1] != '\t')) break;
    at = hit + line.size();
    ++found;
  }
  if (found != 7) return {false, "diagnostic " + std::to_string(found + 1) + " missing or out of order"};

  static const char* const kSuccess[] = {
      "strcpy_s: test string",
      "strncpy_s: test string",
      "strcat_s: test stringtest string",
      "strncat_s: test stringtest stringtest string",
      "memmove_s: test stringtest stringtest string",
      "memcpy_s: test stringtest stringtest string",
  };
  const auto lines = split_lines(text);
  const auto first = std::find(lines.begin(), lines.end(), kSuccess[0]);
  if (first == lines.end() || lines.end() - first < 6) return {false, "success block not found"};
  for (std::size_t i = 0; i < 6; ++i) {
    if (first[static_cast<std::ptrdiff_t>(i)] != kSuccess[i])
      return {false, "success line differs: " + first[static_cast<std::ptrdiff_t>(i)]};
  }
  return {true, "7 diagnostics in order, 6 success lines exact"};
}

Verdict ac2_paper_numerics() {
  Quiet quiet;
  char buffer1[1024] = {};
  char buffer2[1024] = {};
  strcpy_s(buffer1, 1024, "test string");
  strncpy_s(buffer2, 1024, buffer1, 1024);
  strcat_s(buffer1, 1024, buffer2);
  strncat_s(buffer1, 1024, buffer2, 50);
  std::ostringstream detail;
  bool ok = true;
  const std::size_t concat = strnlen_s(buffer1, 100);
  ok &= concat == 33;
  const std::size_t five = strnlen_s("12345", 10);
  ok &= five == 5;

  rsize_t l = concat;
  char* state = nullptr;
  const char* tok1 = strtok_s(buffer1, &l, " ", &state);
  ok &= tok1 != nullptr && std::string{tok1} == "test" && l == 28;
  const rsize_t l1 = l;
  const char* tok2 = strtok_s(nullptr, &l, "gt", &state);
  ok &= tok2 != nullptr && std::string{tok2} == "strin" && l == 21;
  detail << "strnlen=" << concat << " size=" << five << " tokens=" << (tok1 ? tok1 : "-") << "/" << l1 << ","
         << (tok2 ? tok2 : "-") << "/" << l << " (exact)";
  ok &= g_handler_calls == 0;
  return {ok, detail.str()};
}

// A random printf format plus arguments, and what an independent scanner
// predicts format_write must do with it.
struct FormatCase {
  std::string format;
  std::vector<ArgValue> args;
};

FormatCase random_format_case(std::mt19937_64& rng) {
  static constexpr std::string_view kConv = "diouxXfeEgGcspn%";
  static constexpr const char* kIntLen[] = {"", "hh", "h", "l", "ll", "j", "z", "t"};
  static constexpr const char* kFloatLen[] = {"", "l", "L"};
  FormatCase c;
  const int pieces = static_cast<int>(rng() % 7);
  for (int p = 0; p < pieces; ++p) {
    if (rng() % 3 == 0) {
      c.format += "lit ";
      continue;
    }
    const char conv = kConv[rng() % kConv.size()];
    c.format += '%';
    if (conv == '%') {
      c.format += '%';
      continue;
    }
    if (rng() % 3 == 0) c.format += "-+ #0"[rng() % 5];
    if (rng() % 4 == 0) {
      c.format += '*';
      c.args.push_back(arg::Signed{static_cast<std::int64_t>(rng() % 9)});
    } else if (rng() % 2) {
      c.format += std::to_string(1 + rng() % 12);
    }
    if (conv != 'c' && conv != 'p' && rng() % 4 == 0) c.format += "." + std::to_string(rng() % 6);
    switch (conv) {
      case 'd': case 'i':
        c.format += kIntLen[rng() % std::size(kIntLen)];
        c.args.push_back(arg::Signed{static_cast<std::int64_t>(rng() % 100000) - 50000});
        break;
      case 'o': case 'u': case 'x': case 'X':
        c.format += kIntLen[rng() % std::size(kIntLen)];
        c.args.push_back(arg::Unsigned{rng() % 100000});
        break;
      case 'f': case 'e': case 'E': case 'g': case 'G':
        c.format += kFloatLen[rng() % std::size(kFloatLen)];
        c.args.push_back(arg::Float{static_cast<double>(rng() % 100000) / 64.0});
        break;
      case 'c':
        c.args.push_back(arg::Char{static_cast<unsigned char>('a' + rng() % 26)});
        break;
      case 's':
        c.args.push_back(rng() % 3 == 0 ? arg::Str{std::nullopt} : arg::Str{std::string_view{"text"}});
        break;
      case 'p':
        c.args.push_back(arg::Address{rng() % 65536});
        break;
      case 'n':
        c.format += kIntLen[rng() % std::size(kIntLen)];
        c.args.push_back(arg::IntSlot{});
        break;
      default: break;
    }
    c.format += conv;
  }
  return c;
}

// Walks the format counting directives and argument positions on its own.
int oracle_expected_code(const FormatCase& c) {
  bool has_n = false, null_s = false;
  std::size_t arg_index = 0;
  const std::string& f = c.format;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != '%') continue;
    ++i;
    if (f[i] == '%') continue;
    while (std::strchr("-+ #0123456789.*hljztL", f[i]) != nullptr) {
      if (f[i] == '*') ++arg_index;
      ++i;
    }
    if (f[i] == 'n') has_n = true;
    if (f[i] == 's') {
      const auto& a = std::get<arg::Str>(c.args.at(arg_index));
      if (!a.text) null_s = true;
    }
    ++arg_index;
  }
  if (has_n) return 5;
  if (null_s) return 4;
  return 0;
}

Verdict ac3_restraining() {
  Quiet quiet;
  std::mt19937_64 rng{0xAC3};
  int cases = 0, false_negative = 0, false_positive = 0, bad_count = 0, n_cases = 0, s_cases = 0;
  for (; cases < 5000; ++cases) {
    const FormatCase c = random_format_case(rng);
    const int expected = oracle_expected_code(c);
    n_cases += expected == 5;
    s_cases += expected == 4;
    StringSink sink;
    const int rc = format_write("printf_s", sink, c.format, c.args);
    if (expected != 0) {
      if (rc != -expected || sink.count() != 0) ++false_negative;
    } else {
      if (rc < 0) ++false_positive;
      else if (static_cast<std::size_t>(rc) != sink.count()) ++bad_count;
    }
  }
  std::ostringstream d;
  d << cases << " formats (" << n_cases << " with %n, " << s_cases << " with absent %s): " << false_negative
    << " false negatives, " << false_positive << " false positives";
  return {false_negative == 0 && false_positive == 0 && bad_count == 0 && n_cases > 0 && s_cases > 0, d.str()};
}

Verdict ac4_never_overrun() {
  Quiet quiet;
  std::mt19937_64 rng{0xAC4};
  int mutated = 0, unterminated = 0;
  const int calls = 10000;
  for (int i = 0; i < calls; ++i) {
    const auto r = testing::run_random_op(rng, i % testing::kRandomOpCount);
    mutated += !r.canaries_intact;
    unterminated += !r.terminated;
  }
  std::ostringstream d;
  d << calls << " calls: " << mutated << " canary mutations, " << unterminated << " unterminated successes";
  return {mutated == 0 && unterminated == 0, d.str()};
}

Verdict ac5_differential() {
  Quiet quiet;
  std::mt19937_64 rng{0xAC5};
  int clean = 0, mismatches = 0, wrong_verdict = 0, iterations = 0;
  while (clean < 6000 && iterations < 200000) {
    const auto r = testing::run_random_op(rng, iterations % testing::kRandomOpCount);
    ++iterations;
    if ((r.code == 0) != r.expected_ok) ++wrong_verdict;
    if (!r.expected_ok) continue;
    ++clean;
    mismatches += !r.matches_oracle;
  }
  std::ostringstream d;
  d << clean << " violation-free cases: " << mismatches << " mismatches, " << wrong_verdict
    << " unexpected verdicts (min 5000 cases)";
  return {clean >= 5000 && mismatches == 0 && wrong_verdict == 0, d.str()};
}

Verdict ac6_overlap() {
  Quiet quiet;
  long pairs = 0, disagreements = 0;
  for (std::uintptr_t ab = 0; ab <= 16; ++ab)
    for (std::size_t al = 0; al <= 16; ++al)
      for (std::uintptr_t bb = 0; bb <= 16; ++bb)
        for (std::size_t bl = 0; bl <= 16; ++bl) {
          bool cells = false;
          for (std::uintptr_t cell = 0; cell < 40 && !cells; ++cell)
            cells = cell >= ab && cell < ab + al && cell >= bb && cell < bb + bl;
          const ErrorCode rc = validate_no_overlap("f", "a", "b", {ab, al}, {bb, bl});
          disagreements += (rc == 8) != cells || (rc != 0 && rc != 8);
          ++pairs;
        }
  std::ostringstream d;
  d << pairs << " region pairs, " << disagreements << " disagreements (exact)";
  return {disagreements == 0 && pairs == 83521, d.str()};
}

Verdict ac7_handler_contract() {
  int calls = 0;
  {
    Quiet quiet;
    std::ostringstream sink;
    cli::run_string_demo(sink);
    calls = g_handler_calls;
  }
  std::cout.flush();
  std::fflush(nullptr);
  const pid_t pid = fork();
  if (pid < 0) return {false, "fork failed"};
  if (pid == 0) {
    set_diagnostic_sink([](std::string_view) {});
    set_constraint_handler_s(nullptr);
    std::ostringstream sink;
    cli::run_string_demo(sink);
    _exit(0);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  const bool exited_nonzero = WIFEXITED(status) && WEXITSTATUS(status) != 0;
  std::ostringstream d;
  d << calls << " handler calls (want 7); default handler child exit status "
    << (WIFEXITED(status) ? WEXITSTATUS(status) : -1) << " (want nonzero)";
  return {calls == 7 && exited_nonzero, d.str()};
}

Verdict ac8_error_table() {
  struct Row {
    ErrorKind kind;
    int code;
    const char* name;
  };
  static const Row kTable[] = {
      {ErrorKind::NoError, 0, "E_NOERROR"},
      {ErrorKind::NullParameterNotAllowed, 1, "E_NULL_PARAMETER_NOT_ALLOWED"},
      {ErrorKind::ParameterOutOfRange, 2, "E_PARAMETER_OUT_OF_RANGE"},
      {ErrorKind::EnvironmentalLimitNotMet, 3, "E_ENVIRONMENTAL_LIMIT_NOT_MET"},
      {ErrorKind::InvalidFormatParameterS, 4, "E_INVALID_FORMAT_PARAMETER_S"},
      {ErrorKind::InvalidFormatParameterN, 5, "E_INVALID_FORMAT_PARAMETER_N"},
      {ErrorKind::RsizeMaxExceeded, 6, "E_RSIZE_MAX_EXCEEDED"},
      {ErrorKind::NotZero, 7, "E_NOT_ZERO"},
      {ErrorKind::ObjectsOverlap, 8, "E_OBJECTS_OVERLAP"},
      {ErrorKind::NotImplemented, 9, "E_NOT_IMPLEMENTED"},
      {ErrorKind::TokenEndNotFound, 10, "E_TOKEN_END_NOT_FOUND"},
  };
  int matched = 0;
  std::string first_bad;
  for (const Row& row : kTable) {
    if (code_of(row.kind) == row.code && name_of(row.kind) == row.name) ++matched;
    else if (first_bad.empty()) first_bad = row.name;
  }
  std::ostringstream d;
  d << matched << "/11 kinds match" << (first_bad.empty() ? "" : ", first mismatch " + first_bad);
  return {matched == 11 && kErrorKindCount == 11, d.str()};
}

int compare_ints(const void* x, const void* y, void*) {
  const int a = *static_cast<const int*>(x), b = *static_cast<const int*>(y);
  return (a > b) - (a < b);
}

Verdict ac9_sort_search_time() {
  Quiet quiet;
  int arrays = 0, failures = 0;
  for (int length = 0; length <= 6; ++length) {
    int combos = 1;
    for (int i = 0; i < length; ++i) combos *= 3;
    for (int id = 0; id < combos; ++id, ++arrays) {
      std::vector<int> xs(static_cast<std::size_t>(length));
      for (int i = 0, v = id; i < length; ++i, v /= 3) xs[static_cast<std::size_t>(i)] = v % 3;
      const auto original = xs;
      if (qsort_s(xs.data(), xs.size(), sizeof(int), compare_ints, nullptr) != 0) ++failures;
      for (int key = 0; key < 3; ++key) {
        const bool linear = std::find(original.begin(), original.end(), key) != original.end();
        const auto hit = bsearch_s(&key, xs.data(), xs.size(), sizeof(int), compare_ints, nullptr);
        if (hit.has_value() != linear || (hit && xs[*hit] != key)) ++failures;
      }
    }
  }
  char out[32];
  const BrokenTime epoch{0, 0, 0, 1, 0, 70, 4, 0};
  const bool epoch_ok = asctime_s(out, sizeof out, &epoch) == 0 && std::string{out} == "Thu Jan  1 00:00:00 1970\n";
  const bool rejects_25 = asctime_s(out, 25, &epoch) != 0;
  std::ostringstream d;
  d << arrays << " arrays, " << failures << " sort/search disagreements; epoch "
    << (epoch_ok ? "ok" : "wrong") << "; maxsize 25 " << (rejects_25 ? "rejected" : "accepted");
  return {failures == 0 && arrays == 1093 && epoch_ok && rejects_25, d.str()};
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0: no time limit
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "string demo transcript", 1.0, ac1_string_transcript},
      {"AC2", "string numerics", 0, ac2_paper_numerics},
      {"AC3", "%n and absent %s restraining", 5.0, ac3_restraining},
      {"AC4", "never overrun", 10.0, ac4_never_overrun},
      {"AC5", "differential equivalence", 0, ac5_differential},
      {"AC6", "overlap oracle", 0, ac6_overlap},
      {"AC7", "handler contract", 0, ac7_handler_contract},
      {"AC8", "error-code table", 0, ac8_error_table},
      {"AC9", "sort/search and asctime", 0, ac9_sort_search_time},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << v.detail << " [" << timing
              << "]\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
