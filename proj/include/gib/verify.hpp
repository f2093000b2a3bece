#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gib::verify {

struct check_result {
  bool pass = false;
  std::string detail;  // empty on pass, reason on failure
};

struct named_check {
  std::string name;
  std::function<check_result()> run;
};

// Golden checks reproducing the published cycle listings, complete systems,
// completeness sets, invariant classification and survey statistics. Every
// check passes on a correct build.
const std::vector<named_check>& reference_checks();

}  // namespace gib::verify
