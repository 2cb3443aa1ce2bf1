#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvf {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool all_passed() const;
};

// metrics, operators, theorem1, prop2, alg1, counterexample.
std::vector<std::string> suite_names();

// Deterministic for a given seed. Unknown names throw InvalidArgument.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0x5EED);

}  // namespace mvf
