#pragma once

#include <optional>

#include "polysum/rational.hpp"

namespace polysum {

/// Constraint rows are augmented: (c_0 .. c_{n-1} | b).
/// eqs rows mean c.x == b, strict rows mean c.x > b, weak rows mean c.x >= b.
///
/// Finds a rational point satisfying every equality exactly and every strict
/// row with positive slack, or nullopt when none exists. Reduction: maximize a
/// joint slack s over { c.x - s >= b (strict rows), c.x >= b (weak rows),
/// s <= 1 } by exhaustive vertex enumeration of the lifted polyhedron;
/// feasible iff the optimum slack is > 0. The slack cap makes an unbounded
/// slack harmless. The lifted polyhedron must be pointed (it is whenever
/// there is at least one strict row, since the cap plus slacked rows leave
/// no lineality in s and callers' variable spaces are constrained).
std::optional<QVec> solve_strict_feasibility(const QMat& eqs, const QMat& strict_ineqs,
                                             const QMat& weak_ineqs = {});

}  // namespace polysum
