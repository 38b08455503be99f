#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polysum/polytope.hpp"

namespace polysum::fixtures {

QVec qv(std::initializer_list<const char*> coords);
VPolytope make_polytope(std::string name, std::vector<std::vector<const char*>> vertices);

// The recurring cast of exact test polytopes.
VPolytope cube();            // [-1,1]^3
VPolytope octahedron();      // conv{+-e_i}
VPolytope square();          // [-1,1]^2
VPolytope diamond();         // conv{(+-2,0),(0,+-2)}
VPolytope segment_h();       // (0,0)-(1,0)
VPolytope segment_v();       // (0,0)-(0,1)
VPolytope segment_diag();    // (0,0)-(1,1)
VPolytope segment_1d();      // [-1,1] in ambient dim 1
VPolytope point_3d();        // a single point
VPolytope triangle_centered();  // conv{(2,0),(-1,2),(-1,-2)}, perfectly centered
VPolytope rectangle_off();      // [1,3]x[-1,1], origin not interior

}  // namespace polysum::fixtures
