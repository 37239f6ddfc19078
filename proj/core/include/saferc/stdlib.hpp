#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "saferc/error.hpp"

namespace saferc {

using CompareWithContext = int (*)(const void* x, const void* y, void* context);

/// Sorts nmemb elements of `size` bytes in ascending order under compar. Not
/// stable; deterministic for a deterministic comparator.
ErrorCode qsort_s(void* base, rsize_t nmemb, rsize_t size, CompareWithContext compar,
                  void* context);

/// Index of an element equal to *key in a base sorted under compar, or nullopt.
/// A violation also yields nullopt (see last_error()).
std::optional<std::size_t> bsearch_s(const void* key, const void* base, rsize_t nmemb,
                                     rsize_t size, CompareWithContext compar, void* context);

/// Name-to-value lookup used by getenv_s.
class EnvironmentProvider {
 public:
  virtual ~EnvironmentProvider() = default;
  virtual std::optional<std::string> lookup(std::string_view name) const = 0;
};

class MapEnvironment final : public EnvironmentProvider {
 public:
  MapEnvironment() = default;
  explicit MapEnvironment(std::map<std::string, std::string, std::less<>> values)
      : values_(std::move(values)) {}

  void set(std::string name, std::string value) { values_[std::move(name)] = std::move(value); }
  std::optional<std::string> lookup(std::string_view name) const override;

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

/// Snapshot of the process environment taken on first use.
const EnvironmentProvider& process_environment();

/// Looks `name` up in `env`. *len receives the value length (0 if not found).
/// Not found returns EnvironmentalLimitNotMet and a value that does not fit
/// returns ParameterOutOfRange; neither invokes the constraint handler.
ErrorCode getenv_s(std::size_t* len, char* value, rsize_t maxsize, const char* name,
                   const EnvironmentProvider& env);
ErrorCode getenv_s(std::size_t* len, char* value, rsize_t maxsize, const char* name);

/// Calendar fields as in struct tm.
struct BrokenTime {
  int sec = 0;    // [0, 60]
  int min = 0;    // [0, 59]
  int hour = 0;   // [0, 23]
  int mday = 1;   // [1, 31]
  int mon = 0;    // [0, 11]
  int year = 70;  // years since 1900
  int wday = 0;   // [0, 6], Sunday = 0
  int yday = 0;   // [0, 365]
};

bool is_valid(const BrokenTime& t) noexcept;

inline constexpr std::size_t kAsctimeLength = 25;

/// Writes "Www Mmm dd hh:mm:ss yyyy\n" plus terminator. Requires maxsize >= 26
/// and every field in range with a four-digit year.
ErrorCode asctime_s(char* s, rsize_t maxsize, const BrokenTime* timeptr);

}  // namespace saferc
