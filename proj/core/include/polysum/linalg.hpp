#pragma once

#include <optional>

#include "polysum/rational.hpp"

namespace polysum {

/// Clears denominators of a rational vector: returns coprime integers
/// c * v for the unique positive rational c making entries integral and coprime.
/// Zero vector maps to zero vector.
IVec primitive_integer_vector(const QVec& v);

/// Row-scales each row to integers (positive factors), keeping rank intact.
IMat clear_row_denominators(const QMat& m);

/// Exact rank via Bareiss fraction-free elimination.
int rank(const IMat& m);
int rank(const QMat& m);

/// Determinant of a square integer matrix (Bareiss).
BigInt determinant(const IMat& m);

/// Dimension of the affine hull of a nonempty point list.
int affine_dim(const std::vector<QVec>& points);

/// Unique solution of A x = b, or nullopt when the system is singular,
/// underdetermined, or inconsistent. A may have more rows than columns.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

/// Exact inverse of a square matrix, or nullopt when singular.
std::optional<QMat> inverse(const QMat& m);

/// Basis of the right null space {x : m x = 0}.
std::vector<QVec> nullspace(const QMat& m);

QMat transpose(const QMat& m);
QMat mat_mul(const QMat& a, const QMat& b);
QVec mat_vec(const QMat& a, const QVec& x);
QMat identity_matrix(int n);

}  // namespace polysum
