#pragma once

#include <string>

#include "polysum/flags.hpp"
#include "polysum/polytope.hpp"

namespace polysum {

/// Polytope JSON: { "name": str, "ambient_dim": n, "vertices": [["p/q",...],...] }.
/// Rationals are strings ("p/q" or "p"); integer JSON numbers are accepted.
VPolytope parse_polytope_json(const std::string& text);
std::string polytope_to_json(const VPolytope& p, int indent = 1);
VPolytope load_polytope(const std::string& path);
void save_polytope(const std::string& path, const VPolytope& p);

/// Poset JSON: { "ranks": [int,...], "covers": [[lo,hi],...] }.
GradedPoset parse_poset_json(const std::string& text);
GradedPoset load_poset(const std::string& path);

/// Flag vector as a list of { "S": [dims], "count": n }, ordered by mask.
std::string flag_vector_to_json(const FlagVector& fv, int indent = 1);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polysum
