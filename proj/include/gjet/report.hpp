#pragma once

#include <string>
#include <vector>

namespace gjet {

// One verified identity: name, outcome, and the residual witness on failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

inline bool all_pass(const std::vector<CheckResult>& items) {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

}  // namespace gjet
