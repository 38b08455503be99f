#include "polysum/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polysum {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw Error("expected a rational as \"p/q\" string or integer");
}

}  // namespace

VPolytope parse_polytope_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("polytope JSON parse failure: ") + e.what());
  }
  VPolytope p;
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices")) {
    throw Error("polytope JSON must have ambient_dim and vertices");
  }
  p.name = j.value("name", std::string{});
  p.ambient_dim = j.at("ambient_dim").get<int>();
  if (p.ambient_dim <= 0) throw Error("polytope JSON: ambient_dim must be positive");
  for (const json& row : j.at("vertices")) {
    QVec v;
    for (const json& x : row) v.push_back(rat_from_json(x));
    if (static_cast<int>(v.size()) != p.ambient_dim) {
      throw Error("polytope JSON: vertex length differs from ambient_dim");
    }
    p.vertices.push_back(std::move(v));
  }
  if (p.vertices.empty()) throw Error("polytope JSON: no vertices");
  return p;
}

std::string polytope_to_json(const VPolytope& p, int indent) {
  json j;
  j["name"] = p.name;
  j["ambient_dim"] = p.ambient_dim;
  json rows = json::array();
  for (const QVec& v : p.vertices) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(rat_to_string(x));
    rows.push_back(std::move(row));
  }
  j["vertices"] = std::move(rows);
  return j.dump(indent);
}

VPolytope load_polytope(const std::string& path) { return parse_polytope_json(read_text_file(path)); }

void save_polytope(const std::string& path, const VPolytope& p) {
  write_text_file(path, polytope_to_json(p) + "\n");
}

GradedPoset parse_poset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("poset JSON parse failure: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ranks") || !j.contains("covers")) {
    throw Error("poset JSON must have ranks and covers");
  }
  std::vector<int> ranks = j.at("ranks").get<std::vector<int>>();
  std::vector<std::pair<int, int>> covers;
  for (const json& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw Error("poset JSON: covers must be [lo, hi] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return poset_from_covers(ranks, covers);
}

GradedPoset load_poset(const std::string& path) { return parse_poset_json(read_text_file(path)); }

std::string flag_vector_to_json(const FlagVector& fv, int indent) {
  json arr = json::array();
  for (const auto& [mask, count] : fv.counts) {
    json entry;
    json dims = json::array();
    for (int t = 0; t < fv.d; ++t) {
      if (mask & (1u << t)) dims.push_back(t);
    }
    entry["S"] = std::move(dims);
    entry["count"] = count;
    arr.push_back(std::move(entry));
  }
  return arr.dump(indent);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

}  // namespace polysum
