#pragma once

// The module invariants as runnable checks, at desk scale.

#include <string>
#include <vector>

#include "wf/core.hpp"

namespace wf {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct PropertySuite {
  std::string name;
  std::vector<PropertyResult> results;

  bool passed() const;
};

/// Every suite, each property fed from its own split of the seed.
std::vector<PropertySuite> run_property_suites(Nat seed = 0);

}  // namespace wf
