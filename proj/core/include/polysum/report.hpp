#pragma once

#include <string>
#include <vector>

#include "polysum/rational.hpp"

namespace polysum {

/// Outcome of one identity check. pass holds iff lhs == rhs exactly.
/// advisory marks a check whose preconditions were violated on purpose
/// (degenerate negative controls); the verdict is then informational.
struct VerifierReport {
  std::string identity;
  Rat lhs = 0;
  Rat rhs = 0;
  bool pass = false;
  bool advisory = false;
  std::vector<std::string> notes;
  std::vector<std::string> diagnostics;
};

std::string report_to_json_string(const VerifierReport& r, int indent = -1);

}  // namespace polysum
