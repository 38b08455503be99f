#include "support/fixtures.hpp"

namespace polysum::fixtures {

QVec qv(std::initializer_list<const char*> coords) {
  QVec v;
  for (const char* c : coords) v.push_back(parse_rat(c));
  return v;
}

VPolytope make_polytope(std::string name, std::vector<std::vector<const char*>> vertices) {
  VPolytope p;
  p.name = std::move(name);
  p.ambient_dim = static_cast<int>(vertices.front().size());
  for (const auto& row : vertices) {
    QVec v;
    for (const char* c : row) v.push_back(parse_rat(c));
    p.vertices.push_back(std::move(v));
  }
  return p;
}

VPolytope cube() {
  return make_polytope("cube", {{"-1", "-1", "-1"},
                                {"-1", "-1", "1"},
                                {"-1", "1", "-1"},
                                {"-1", "1", "1"},
                                {"1", "-1", "-1"},
                                {"1", "-1", "1"},
                                {"1", "1", "-1"},
                                {"1", "1", "1"}});
}

VPolytope octahedron() {
  return make_polytope("octahedron", {{"1", "0", "0"},
                                      {"-1", "0", "0"},
                                      {"0", "1", "0"},
                                      {"0", "-1", "0"},
                                      {"0", "0", "1"},
                                      {"0", "0", "-1"}});
}

VPolytope square() {
  return make_polytope("square", {{"-1", "-1"}, {"-1", "1"}, {"1", "-1"}, {"1", "1"}});
}

VPolytope diamond() {
  return make_polytope("diamond", {{"2", "0"}, {"-2", "0"}, {"0", "2"}, {"0", "-2"}});
}

VPolytope segment_h() { return make_polytope("hseg", {{"0", "0"}, {"1", "0"}}); }

VPolytope segment_v() { return make_polytope("vseg", {{"0", "0"}, {"0", "1"}}); }

VPolytope segment_diag() { return make_polytope("dseg", {{"0", "0"}, {"1", "1"}}); }

VPolytope segment_1d() { return make_polytope("segment", {{"-1"}, {"1"}}); }

VPolytope point_3d() { return make_polytope("point", {{"1/2", "-3", "7"}}); }

VPolytope triangle_centered() {
  return make_polytope("triangle", {{"2", "0"}, {"-1", "2"}, {"-1", "-2"}});
}

VPolytope rectangle_off() {
  return make_polytope("rectangle_off", {{"1", "-1"}, {"1", "1"}, {"3", "-1"}, {"3", "1"}});
}

}  // namespace polysum::fixtures
