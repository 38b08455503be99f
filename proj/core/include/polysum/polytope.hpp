#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

#include "polysum/rational.hpp"
#include "polysum/report.hpp"

namespace polysum {

using VertexSet = boost::dynamic_bitset<>;

std::size_t vertex_set_hash(const VertexSet& s);

/// Vertex representation: an irredundant list of exact rational points.
/// Instances produced by hull() are canonical (vertices sorted lexicographically).
struct VPolytope {
  int ambient_dim = 0;
  std::vector<QVec> vertices;
  std::string name;
};

/// <normal, x> <= offset for every point of the polytope, with equality
/// exactly on the incident vertices. The normal is a primitive integer
/// vector (coprime entries, outer orientation); for polytopes that are not
/// full-dimensional it lies in the direction space of the affine hull.
struct Facet {
  QVec normal;
  Rat offset;
  VertexSet incident;
};

/// <normal, x> == offset on the whole polytope (affine hull cutout).
struct LinearEquation {
  QVec normal;
  Rat offset;
};

struct HullData {
  VPolytope poly;
  std::vector<Facet> facets;
  std::vector<LinearEquation> hull_equations;
  int dim = -1;  // affine dimension
};

/// Exact convex hull. Deduplicates input, drops non-vertices, enumerates all
/// facets. Non-full-dimensional input is reduced to affine-hull coordinates;
/// facet normals are mapped back into the hull's direction space and the
/// affine hull equations are recorded.
HullData hull(const std::vector<QVec>& points);

/// A face as the set of polytope vertices lying on it. dim == -1 for the
/// empty face.
struct Face {
  VertexSet verts;
  int dim = -1;
};

struct FaceLattice {
  int d = -1;           // dimension of the top face
  int bottom_dim = -1;  // -1 for a full lattice, dim(g) for intervals
  int n_vertices = 0;
  std::vector<Face> faces;  // sorted by (dim, vertex set); contains bottom and top

  int index_of(const VertexSet& s) const;  // -1 when absent
  int bottom_index() const;
  int top_index() const;
  /// f-vector of the given face: counts of lattice faces below it by dim.
  std::vector<long long> subface_counts(int face_idx) const;
};

/// All faces as intersections of facet vertex sets, closed under
/// intersection, plus the empty face and the polytope itself.
FaceLattice face_lattice(const HullData& h);

/// counts[k] for k = 0..d inclusive; counts[d] == 1 is the polytope itself.
struct FVector {
  int d = -1;
  std::vector<long long> counts;
  std::string display() const;  // proper faces only: "(8, 12, 6)"; "(1)" when d == 0
  bool operator==(const FVector&) const = default;
};

FVector f_vector(const FaceLattice& l);

/// Euler's equation: sum over k < d of (-1)^k f_k == 1 - (-1)^d.
VerifierReport euler_check(const FVector& f);

/// Sub-poset {h : g <= h <= f}. Throws unless g <= f.
FaceLattice interval(const FaceLattice& l, int g_idx, int f_idx);

/// p(x) = f_0 + f_1 x + ... + f_d x^d with f_d = 1; p(-1) == 1 is Euler.
struct CharPoly {
  std::vector<BigInt> coeffs;  // lowest degree first; may be negative (delta variant)

  Rat eval(const Rat& x) const;
  CharPoly derivative() const;
  CharPoly operator*(const CharPoly& other) const;
  CharPoly operator+(const CharPoly& other) const;
  CharPoly operator-(const CharPoly& other) const;
  bool operator==(const CharPoly&) const = default;
  std::string display() const;
  void trim();
};

CharPoly char_poly(const FVector& f);

/// P* = {y : <y,x> <= 1 for all x in P}. Requires the origin strictly
/// interior; throws with the violating facet otherwise.
HullData polar_dual(const HullData& h);

/// F^D: the face of P* carried by the facets of P containing F.
/// Returns an index into l_dual. Throws on trivial faces.
int dual_face_map(const HullData& p, const FaceLattice& l, const HullData& dual,
                  const FaceLattice& l_dual, int face_idx);

}  // namespace polysum
