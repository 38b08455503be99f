#pragma once

#include <vector>

#include "polysum/polytope.hpp"
#include "polysum/report.hpp"

namespace polysum {

/// One realized face of P+P* for a perfectly centered P: the hull of
/// G + F^D over a chain G <= F of nontrivial faces of P.
struct PcSumFace {
  int g = -1;  // face index in P's lattice
  int f = -1;
  int realized = -1;  // face index in the realized lattice
};

/// Tests relint(F) meet N(F;P) for every nonempty face F, as exact strict
/// feasibility: x a strictly positive convex combination of F's vertices and
/// a nonnegative combination of the closed-cone generators. Requires a
/// full-dimensional polytope; an origin that is not strictly interior fails
/// immediately (with diagnostic) rather than erroring.
VerifierReport is_perfectly_centered(const HullData& h, const FaceLattice& l);

struct PcSumLattice {
  VPolytope poly;       // vertex set of P+P* as realized points
  FaceLattice lattice;  // assembled from realized faces by geometric containment
  std::vector<PcSumFace> provenance;
};

/// Realizes every H = G + F^D over nontrivial chains G <= F and assembles
/// the face lattice of P+P* from them; validates the per-dimension counts
/// against fvthm_predict. Requires is_perfectly_centered to pass.
PcSumLattice pc_sum_lattice(const HullData& h, const FaceLattice& l);

/// Triple cross-check of the f-vector of P+P*: flag-vector prediction,
/// chain-realized lattice, and the directly computed sum.
VerifierReport verify_fvthm(const HullData& h, const FaceLattice& l);

/// The flag-vector-only identity for perfectly centered polytopes; equal to
/// the Eulerian-poset identity evaluated on P's flag vector.
VerifierReport verify_mainthm_pc(const FaceLattice& l);

}  // namespace polysum
