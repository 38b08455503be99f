#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polysum/polytope.hpp"
#include "polysum/report.hpp"

namespace polysum {

/// Closed outer normal cone of a face, generated by the outer normals of the
/// facets containing it (affine-hull-aware: generators lie in the polytope's
/// direction space). For the whole polytope the generator set is empty.
struct NormalCone {
  int face_index = -1;
  std::vector<QVec> generators;
  int dim = 0;  // dimension of the closed cone in ambient space
};

struct MinkowskiSum {
  std::vector<HullData> summands;
  std::vector<FaceLattice> summand_lattices;
  HullData sum;
  FaceLattice lattice;
  int d = -1;  // dim of the sum
};

/// Hull of all r-fold vertex sums, with the full face lattice.
MinkowskiSum minkowski_sum(const std::vector<VPolytope>& summands);

NormalCone normal_cone(const HullData& h, const FaceLattice& l, int face_idx);

/// Sum of the cone's generators: a point of the relative interior of the
/// closed cone. Verifies that the face of the polytope maximizing it is
/// exactly the source face.
QVec relint_witness(const NormalCone& c, const HullData& h, const FaceLattice& l);

/// Decomposition F = t_1(F) + ... + t_r(F) of one face of the sum.
struct FaceDecomposition {
  std::vector<int> parts;  // face index per summand lattice
  bool exact = false;      // dim(F) == sum of part dims
};

struct SumDecomposition {
  const MinkowskiSum* ms = nullptr;
  std::vector<FaceDecomposition> by_face;  // indexed like ms->lattice.faces; empty face has no parts
};

/// Positive weight applied to generator g of the cone of face f when forming
/// the witness; used to check witness-independence of the decomposition.
using WitnessWeights = std::function<Rat(int face_idx, int generator_idx)>;

SumDecomposition decompose_faces(const MinkowskiSum& ms);
SumDecomposition decompose_faces(const MinkowskiSum& ms, const WitnessWeights& weights);

/// True iff every facet of the sum decomposes exactly.
bool is_relatively_general_position(const SumDecomposition& sd);

/// f^delta_k(F) = f_k(F) - sum_i f_k(t_i(F)), k = 0..dim(F).
struct DeltaVector {
  int dim = -1;
  std::vector<Rat> entries;
};

DeltaVector delta_vector(int face_idx, const SumDecomposition& sd);

/// sum_k (-1)^k k f^delta_k(P) == 0 for full-dimensional summands in general
/// position. Precondition violations downgrade the report to advisory.
VerifierReport verify_mainthm(const SumDecomposition& sd);

/// sum_k (-1)^k (k+a) f^delta_k(P) == a(1-r)(1-(-1)^d).
VerifierReport verify_maincor(const SumDecomposition& sd, const Rat& a);

/// sum_k (-1)^k k f^delta_k(P) == (-1)^{d+1} sum of dims of low-dimensional
/// summands; general position required (advisory otherwise).
VerifierReport verify_maincor2(const SumDecomposition& sd);

/// sum over nonempty faces F of (-1)^{d-dim F} f^delta_k(F) equals
/// -(-1)^{d-k} |{i : dim(P_i) = k}|; no general-position hypothesis.
VerifierReport verify_thm_delta(const SumDecomposition& sd, int k);

/// For a face with exact decomposition: char polys multiply,
/// p(x) = prod p_i(x), and sum_k (-1)^k k f^delta_k(F) == 0.
VerifierReport verify_lemface(const SumDecomposition& sd, int face_idx);

/// sum over nonempty faces F of (-1)^{d-dim F} f_k(F) == 0 for k < d.
VerifierReport verify_lem_euler(const FaceLattice& l, int k);

/// sum over nonempty faces F of (-1)^{d-dim F} f_k(t_i(F)) equals
/// (-1)^{d-dim(P_i)} when k == dim(P_i), else 0. i is 0-based here.
VerifierReport verify_lem_summand(const SumDecomposition& sd, int i, int k);

/// Exact rational rotation via the Cayley transform of a random skew matrix.
QMat cayley_rotation(int d, std::uint64_t seed, int shrink_step);

struct PerturbResult {
  std::vector<VPolytope> rotated;
  std::uint64_t seed = 0;
  int retries_used = 0;
  bool identity = false;  // input already in general position
};

/// Rotates the summands by small exact rotations until the sum is relatively
/// in general position. Summand f-vectors are preserved exactly (rotations);
/// asserts f_k(P') >= f_k(P) componentwise. Throws after max_retries
/// attempts with halved rotation magnitudes.
PerturbResult perturb_to_general_position(const std::vector<VPolytope>& summands,
                                          std::uint64_t seed, int max_retries = 16);

}  // namespace polysum
