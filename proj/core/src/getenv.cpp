#include <cstring>

#include "saferc/constraint.hpp"
#include "saferc/stdlib.hpp"

extern char** environ;

namespace saferc {
namespace {

class ProcessEnvironment final : public EnvironmentProvider {
 public:
  ProcessEnvironment() {
    for (char** entry = environ; entry != nullptr && *entry != nullptr; ++entry) {
      const std::string_view kv{*entry};
      const auto eq = kv.find('=');
      if (eq == std::string_view::npos) continue;
      values_.emplace(std::string{kv.substr(0, eq)}, std::string{kv.substr(eq + 1)});
    }
  }

  std::optional<std::string> lookup(std::string_view name) const override {
    const auto it = values_.find(name);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace

std::optional<std::string> MapEnvironment::lookup(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

const EnvironmentProvider& process_environment() {
  static const ProcessEnvironment env;
  return env;
}

ErrorCode getenv_s(std::size_t* len, char* value, rsize_t maxsize, const char* name,
                   const EnvironmentProvider& env) {
  constexpr std::string_view fn = "getenv_s";
  const auto fail = [&](ErrorCode rc) {
    if (len != nullptr) *len = 0;
    if (value != nullptr && maxsize != 0 && within_rsize_max(maxsize)) value[0] = '\0';
    return rc;
  };

  if (ErrorCode rc = validate_not_null(fn, "name", name)) return fail(rc);
  if (maxsize != 0) {
    if (ErrorCode rc = validate_not_null(fn, "value", value)) return fail(rc);
  }
  if (ErrorCode rc = validate_rsize_limit(fn, "maxsize", maxsize)) return fail(rc);
  if (value != nullptr) {
    if (ErrorCode rc = validate_not_zero(fn, "maxsize", maxsize)) return fail(rc);
  }

  const auto found = env.lookup(name);
  if (!found) return fail(record_status(code_of(ErrorKind::EnvironmentalLimitNotMet)));

  if (len != nullptr) *len = found->size();
  if (value == nullptr) return kOk;
  if (found->size() >= maxsize) {
    value[0] = '\0';
    return record_status(code_of(ErrorKind::ParameterOutOfRange));
  }
  std::memcpy(value, found->c_str(), found->size() + 1);
  return kOk;
}

ErrorCode getenv_s(std::size_t* len, char* value, rsize_t maxsize, const char* name) {
  return getenv_s(len, value, maxsize, name, process_environment());
}

}  // namespace saferc
