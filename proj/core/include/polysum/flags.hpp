#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polysum/polytope.hpp"
#include "polysum/report.hpp"

namespace polysum {

/// Finite graded poset with unique bottom (rank 0) and top. For a d-polytope
/// face lattice the bottom is the empty face and the top has rank d+1;
/// nontrivial elements carry dim = rank - 1, the dimension indexing used by
/// FlagVector.
struct GradedPoset {
  int n = 0;
  int top_rank = 0;
  int bottom = -1, top = -1;
  std::vector<int> rank;
  std::vector<VertexSet> up;  // up[i] = bitset of j with i <= j (reflexive)

  bool leq(int a, int b) const { return up[a].test(b); }
};

GradedPoset from_face_lattice(const FaceLattice& l);

/// Builds and validates a poset from explicit cover relations. Throws unless
/// it is graded with unique bottom at rank 0 and unique top.
GradedPoset poset_from_covers(const std::vector<int>& ranks,
                              const std::vector<std::pair<int, int>>& covers);

/// Every interval of rank difference >= 1 has equally many elements of odd
/// and even rank.
bool is_eulerian(const GradedPoset& p);

/// Chain counts indexed by sets of dimensions S, where S is a subset of
/// {0..d-1} and d = top_rank - 1. Sets are encoded as bitmasks. Convention:
/// the trivial dimensions -1 and d extend every chain uniquely, so
/// f_{S u {-1}} = f_{S u {d}} = f_S; accessors strip them.
struct FlagVector {
  int d = 0;
  std::map<std::uint32_t, long long> counts;

  long long f_mask(std::uint32_t mask) const;
  /// dims may include -1 and d (stripped); duplicates collapse.
  long long f(const std::vector<int>& dims) const;
};

FlagVector flag_vector(const GradedPoset& p);

/// All Bayer-Billera instances: S subset of {0..d-1}, gap pair {i,k} from
/// S u {-1,d} with i < k-1 and no element of S strictly between.
VerifierReport verify_bayer_billera(const FlagVector& fv);

/// sum_{j=i..k} (-1)^j f_{i,j,k} == 0, with f_{i,i,k} = f_{i,k}.
VerifierReport verify_dsrshort(const FlagVector& fv, int i, int k);

/// sum_k (-1)^k k (sum_i f_{i,i+d-1-k} - f_k - f_{d-1-k}) == 0.
VerifierReport verify_nestthm(const FlagVector& fv);

/// Predicted f-vector of P+P* for a perfectly centered P:
/// f_k = sum_{i=0..k} f_{i,i+d-1-k}.
FVector fvthm_predict(const FlagVector& fv);

}  // namespace polysum
