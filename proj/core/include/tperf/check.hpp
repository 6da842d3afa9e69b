#pragma once

#include <string>

namespace tperf {

// Outcome of an audit. `failure` names the first violated clause.
struct CheckResult {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

inline CheckResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace tperf
