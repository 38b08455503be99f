#include "polysum/report.hpp"

#include <json.hpp>

namespace polysum {

std::string report_to_json_string(const VerifierReport& r, int indent) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["lhs"] = rat_to_string(r.lhs);
  j["rhs"] = rat_to_string(r.rhs);
  j["pass"] = r.pass;
  j["advisory"] = r.advisory;
  j["notes"] = r.notes;
  j["diagnostics"] = r.diagnostics;
  return j.dump(indent);
}

}  // namespace polysum
