#pragma once

#include <string>
#include <vector>

namespace dcmv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string note;
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace dcmv
