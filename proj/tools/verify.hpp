#pragma once

#include <string>
#include <vector>

namespace shidoku::cli {

struct Check {
  std::string id;
  std::string description;
  bool passed = false;
};

/// Every published value the library reproduces, checked against a fresh
/// computation.
std::vector<Check> run_verification();

}  // namespace shidoku::cli
