#include <doctest.h>

#include <algorithm>

#include "polysum/minkowski.hpp"
#include "polysum/random.hpp"
#include "support/fixtures.hpp"

using namespace polysum;
using fixtures::qv;

namespace {

int face_of_dim_with_witness(const MinkowskiSum& ms, int dim, const QVec& direction) {
  // the face of the sum exposed by `direction`
  Rat best;
  bool have = false;
  VertexSet arg(ms.sum.poly.vertices.size());
  for (std::size_t i = 0; i < ms.sum.poly.vertices.size(); ++i) {
    const Rat v = dot(direction, ms.sum.poly.vertices[i]);
    if (!have || v > best) {
      best = v;
      arg.reset();
      arg.set(i);
      have = true;
    } else if (v == best) {
      arg.set(i);
    }
  }
  const int idx = ms.lattice.index_of(arg);
  REQUIRE(idx >= 0);
  REQUIRE(ms.lattice.faces[idx].dim == dim);
  return idx;
}

std::vector<Rat> delta_of_top(const SumDecomposition& sd) {
  const DeltaVector dv = delta_vector(sd.ms->lattice.top_index(), sd);
  return dv.entries;
}

}  // namespace

TEST_CASE("square + diamond is the octagon") {
  const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
  CHECK(ms.d == 2);
  const FVector f = f_vector(ms.lattice);
  CHECK(f.counts == std::vector<long long>{8, 8, 1});
}

TEST_CASE("two independent segments sum to the unit square") {
  const MinkowskiSum ms = minkowski_sum({fixtures::segment_h(), fixtures::segment_v()});
  const FVector f = f_vector(ms.lattice);
  CHECK(f.counts == std::vector<long long>{4, 4, 1});
}

TEST_CASE("cube + octahedron has f = (24, 48, 26)") {
  const MinkowskiSum ms = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
  const FVector f = f_vector(ms.lattice);
  CHECK(f.counts == std::vector<long long>{24, 48, 26, 1});
}

TEST_CASE("minkowski_sum rejects mismatched ambient dimensions") {
  CHECK_THROWS_AS(minkowski_sum({fixtures::square(), fixtures::cube()}), Error);
}

TEST_CASE("normal cones on the square") {
  const MinkowskiSum ms = minkowski_sum({fixtures::square()});
  // facet x1 = 1
  const int facet = face_of_dim_with_witness(ms, 1, qv({"1", "0"}));
  const NormalCone c1 = normal_cone(ms.sum, ms.lattice, facet);
  REQUIRE(c1.generators.size() == 1);
  CHECK(c1.generators[0] == qv({"1", "0"}));
  CHECK(c1.dim == 1);
  CHECK(relint_witness(c1, ms.sum, ms.lattice) == qv({"1", "0"}));

  // vertex (1,1)
  const int vert = face_of_dim_with_witness(ms, 0, qv({"1", "1"}));
  const NormalCone c0 = normal_cone(ms.sum, ms.lattice, vert);
  CHECK(c0.generators.size() == 2);
  CHECK(c0.dim == 2);
  CHECK(relint_witness(c0, ms.sum, ms.lattice) == qv({"1", "1"}));

  CHECK_THROWS_AS(normal_cone(ms.sum, ms.lattice, ms.lattice.bottom_index()), Error);
}

TEST_CASE("cube vertex cones have full dimension") {
  const MinkowskiSum ms = minkowski_sum({fixtures::cube()});
  for (std::size_t i = 0; i < ms.lattice.faces.size(); ++i) {
    if (ms.lattice.faces[i].dim != 0) continue;
    const NormalCone c = normal_cone(ms.sum, ms.lattice, static_cast<int>(i));
    CHECK(c.generators.size() == 3);
    CHECK(c.dim == 3);
  }
}

TEST_CASE("octagon decomposition: edges split into square edges and diamond vertices") {
  const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
  const SumDecomposition sd = decompose_faces(ms);
  const int edge = face_of_dim_with_witness(ms, 1, qv({"1", "0"}));
  const FaceDecomposition& dec = sd.by_face[edge];
  CHECK(ms.summand_lattices[0].faces[dec.parts[0]].dim == 1);  // square edge x1=1
  CHECK(ms.summand_lattices[1].faces[dec.parts[1]].dim == 0);  // diamond vertex (2,0)
  CHECK(dec.exact);
  CHECK(is_relatively_general_position(sd));
}

TEST_CASE("parallelogram top face decomposes as segment + segment, exactly") {
  const MinkowskiSum ms = minkowski_sum({fixtures::segment_h(), fixtures::segment_v()});
  const SumDecomposition sd = decompose_faces(ms);
  const FaceDecomposition& top = sd.by_face[ms.lattice.top_index()];
  CHECK(ms.summand_lattices[0].faces[top.parts[0]].dim == 1);
  CHECK(ms.summand_lattices[1].faces[top.parts[1]].dim == 1);
  CHECK(top.exact);  // 2 == 1 + 1
}

TEST_CASE("cube + cube facets decompose inexactly") {
  const VPolytope cube = fixtures::cube();
  const MinkowskiSum ms = minkowski_sum({cube, cube});
  const SumDecomposition sd = decompose_faces(ms);
  bool saw_facet = false;
  for (std::size_t i = 0; i < ms.lattice.faces.size(); ++i) {
    if (ms.lattice.faces[i].dim != ms.d - 1) continue;
    saw_facet = true;
    CHECK(!sd.by_face[i].exact);  // facet + facet: 2 != 2 + 2
  }
  CHECK(saw_facet);
  CHECK(!is_relatively_general_position(sd));
}

TEST_CASE("square + parallel segment is not in general position") {
  const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::segment_h()});
  const SumDecomposition sd = decompose_faces(ms);
  CHECK(!is_relatively_general_position(sd));
}

TEST_CASE("delta vectors of the stated sums") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const SumDecomposition sd = decompose_faces(ms);
    const auto e = delta_of_top(sd);
    CHECK(e[0] == 0);
    CHECK(e[1] == 0);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::segment_h(), fixtures::segment_v()});
    const SumDecomposition sd = decompose_faces(ms);
    const auto e = delta_of_top(sd);
    CHECK(e[0] == 0);
    CHECK(e[1] == 2);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
    const SumDecomposition sd = decompose_faces(ms);
    const auto e = delta_of_top(sd);
    CHECK(e[0] == 10);
    CHECK(e[1] == 24);
    CHECK(e[2] == 12);
  }
}

TEST_CASE("verify_mainthm on the stated sums") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const VerifierReport r = verify_mainthm(decompose_faces(ms));
    CHECK(r.pass);
    CHECK(!r.advisory);
    CHECK(r.lhs == 0);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
    const VerifierReport r = verify_mainthm(decompose_faces(ms));
    CHECK(r.pass);
    CHECK(r.lhs == 0);
  }
  {
    // negative control: rectangle = square + parallel segment
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::segment_h()});
    const VerifierReport r = verify_mainthm(decompose_faces(ms));
    CHECK(!r.pass);
    CHECK(r.advisory);
    CHECK(r.lhs == 1);
  }
}

TEST_CASE("verify_maincor at several a") {
  const MinkowskiSum oct = minkowski_sum({fixtures::square(), fixtures::diamond()});
  const SumDecomposition sd_oct = decompose_faces(oct);
  CHECK(verify_maincor(sd_oct, Rat(5)).pass);  // even dimension kills the rhs

  const MinkowskiSum co = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
  const SumDecomposition sd_co = decompose_faces(co);
  const VerifierReport r = verify_maincor(sd_co, Rat(1));
  CHECK(r.pass);
  CHECK(r.lhs == -2);
  CHECK(r.rhs == -2);

  // a = 0 reduces to the mainthm identity
  const VerifierReport r0 = verify_maincor(sd_co, Rat(0));
  const VerifierReport rm = verify_mainthm(sd_co);
  CHECK(r0.lhs == rm.lhs);
  CHECK(r0.rhs == rm.rhs);
}

TEST_CASE("maincor lhs is affine in a") {
  const MinkowskiSum co = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
  const SumDecomposition sd = decompose_faces(co);
  const Rat l0 = verify_maincor(sd, Rat(0)).lhs;
  const Rat l1 = verify_maincor(sd, Rat(1)).lhs;
  const Rat l7 = verify_maincor(sd, Rat(7, 2)).lhs;
  CHECK(l7 == l0 + Rat(7, 2) * (l1 - l0));
}

TEST_CASE("verify_maincor2 on the stated sums") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::segment_h(), fixtures::segment_v()});
    const VerifierReport r = verify_maincor2(decompose_faces(ms));
    CHECK(r.pass);
    CHECK(r.lhs == -2);
    CHECK(r.rhs == -2);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::segment_diag()});
    const FVector f = f_vector(ms.lattice);
    CHECK(f.counts == std::vector<long long>{6, 6, 1});
    const VerifierReport r = verify_maincor2(decompose_faces(ms));
    CHECK(r.pass);
    CHECK(r.lhs == -1);
    CHECK(r.rhs == -1);
  }
  {
    // all summands full-dimensional: rhs is 0, same as the mainthm identity
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const VerifierReport r = verify_maincor2(decompose_faces(ms));
    CHECK(r.pass);
    CHECK(r.rhs == 0);
  }
}

TEST_CASE("verify_thm_delta on the stated sums") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const VerifierReport r = verify_thm_delta(decompose_faces(ms), 0);
    CHECK(r.pass);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::segment_diag()});
    const VerifierReport r = verify_thm_delta(decompose_faces(ms), 1);
    CHECK(r.pass);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::cube(), fixtures::octahedron()});
    const SumDecomposition sd = decompose_faces(ms);
    const VerifierReport r = verify_thm_delta(sd, 2);
    CHECK(r.pass);
    CHECK(r.lhs == 0);
    CHECK_THROWS_AS(verify_thm_delta(sd, 3), Error);
  }
}

TEST_CASE("thm_delta needs no general position: cube + cube") {
  const VPolytope cube = fixtures::cube();
  const MinkowskiSum ms = minkowski_sum({cube, cube});
  const SumDecomposition sd = decompose_faces(ms);
  for (int k = 0; k < ms.d; ++k) CHECK(verify_thm_delta(sd, k).pass);
}

TEST_CASE("verify_lemface on the stated faces") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::segment_h(), fixtures::segment_v()});
    const SumDecomposition sd = decompose_faces(ms);
    const VerifierReport r = verify_lemface(sd, ms.lattice.top_index());
    CHECK(r.pass);
    CHECK(r.lhs == 0);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const SumDecomposition sd = decompose_faces(ms);
    for (std::size_t i = 0; i < ms.lattice.faces.size(); ++i) {
      const int dim = ms.lattice.faces[i].dim;
      if (dim < 0 || dim >= ms.d) continue;  // proper faces of the octagon are all exact
      CHECK(verify_lemface(sd, static_cast<int>(i)).pass);
    }
  }
  {
    // inexact faces are rejected
    const VPolytope cube = fixtures::cube();
    const MinkowskiSum ms = minkowski_sum({cube, cube});
    const SumDecomposition sd = decompose_faces(ms);
    CHECK_THROWS_AS(verify_lemface(sd, ms.lattice.top_index()), Error);
    // vertices decompose exactly and satisfy the identity
    for (std::size_t i = 0; i < ms.lattice.faces.size(); ++i) {
      if (ms.lattice.faces[i].dim != 0) continue;
      const VerifierReport r = verify_lemface(sd, static_cast<int>(i));
      CHECK(r.pass);
      break;
    }
  }
}

TEST_CASE("verify_lem_euler on cube and square") {
  const FaceLattice cube = face_lattice(hull(fixtures::cube().vertices));
  CHECK(verify_lem_euler(cube, 0).pass);
  CHECK(verify_lem_euler(cube, 1).pass);
  CHECK(verify_lem_euler(cube, 2).pass);
  CHECK_THROWS_AS(verify_lem_euler(cube, 3), Error);

  const FaceLattice sq = face_lattice(hull(fixtures::square().vertices));
  CHECK(verify_lem_euler(sq, 0).pass);
  CHECK(verify_lem_euler(sq, 1).pass);
}

TEST_CASE("verify_lem_summand on the stated sums") {
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::diamond()});
    const SumDecomposition sd = decompose_faces(ms);
    const VerifierReport r = verify_lem_summand(sd, 0, 0);
    CHECK(r.pass);
    CHECK(r.lhs == 0);
  }
  {
    const MinkowskiSum ms = minkowski_sum({fixtures::square(), fixtures::segment_diag()});
    const SumDecomposition sd = decompose_faces(ms);
    const VerifierReport r1 = verify_lem_summand(sd, 1, 1);  // k == dim(segment)
    CHECK(r1.pass);
    CHECK(r1.lhs == -1);
    CHECK(r1.rhs == -1);
    const VerifierReport r0 = verify_lem_summand(sd, 1, 0);
    CHECK(r0.pass);
    CHECK(r0.lhs == 0);
    CHECK_THROWS_AS(verify_lem_summand(sd, 2, 0), Error);
    CHECK_THROWS_AS(verify_lem_summand(sd, 0, 2), Error);
  }
}

TEST_CASE("decomposition reconstructs each face from its parts") {
  SplitMix64 rng(515);
  for (auto summands : {std::vector<VPolytope>{fixtures::square(), fixtures::diamond()},
                        std::vector<VPolytope>{fixtures::square(), fixtures::segment_diag()},
                        std::vector<VPolytope>{fixtures::segment_h(), fixtures::segment_v()},
                        std::vector<VPolytope>{rand_polytope(2, 7, rng.next()).poly,
                                               rand_polytope(2, 7, rng.next()).poly},
                        std::vector<VPolytope>{rand_polytope(3, 6, rng.next()).poly,
                                               rand_polytope(3, 6, rng.next()).poly}}) {
    const MinkowskiSum ms = minkowski_sum(summands);
    const SumDecomposition sd = decompose_faces(ms);
    for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
      const Face& f = ms.lattice.faces[fi];
      if (f.dim < 0) continue;
      std::vector<QVec> parts_sum{QVec(ms.sum.poly.ambient_dim, Rat(0))};
      for (std::size_t i = 0; i < sd.by_face[fi].parts.size(); ++i) {
        const Face& part = ms.summand_lattices[i].faces[sd.by_face[fi].parts[i]];
        std::vector<QVec> next;
        for (const QVec& acc : parts_sum) {
          for (int v = static_cast<int>(part.verts.find_first()); v != -1;
               v = static_cast<int>(part.verts.find_next(v))) {
            next.push_back(vec_add(acc, ms.summands[i].poly.vertices[v]));
          }
        }
        parts_sum = std::move(next);
      }
      const HullData mini = hull(parts_sum);
      VertexSet realized(ms.sum.poly.vertices.size());
      for (const QVec& p : mini.poly.vertices) {
        const auto it = std::lower_bound(ms.sum.poly.vertices.begin(), ms.sum.poly.vertices.end(),
                                         p, lex_less);
        REQUIRE(it != ms.sum.poly.vertices.end());
        REQUIRE(*it == p);
        realized.set(it - ms.sum.poly.vertices.begin());
      }
      CHECK(realized == f.verts);
    }
  }
}

TEST_CASE("dim(F) <= sum of part dims, with exactness the equality case") {
  SplitMix64 rng(808);
  const MinkowskiSum ms = minkowski_sum({rand_polytope(3, 6, rng.next()).poly,
                                         rand_polytope(3, 6, rng.next()).poly});
  const SumDecomposition sd = decompose_faces(ms);
  for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
    const Face& f = ms.lattice.faces[fi];
    if (f.dim < 0) continue;
    int dims = 0;
    for (std::size_t i = 0; i < sd.by_face[fi].parts.size(); ++i) {
      dims += ms.summand_lattices[i].faces[sd.by_face[fi].parts[i]].dim;
    }
    CHECK(f.dim <= dims);
    CHECK(sd.by_face[fi].exact == (f.dim == dims));
  }
}

TEST_CASE("decomposition is independent of the witness weights") {
  for (auto summands : {std::vector<VPolytope>{fixtures::square(), fixtures::diamond()},
                        std::vector<VPolytope>{fixtures::square(), fixtures::segment_diag()}}) {
    const MinkowskiSum ms = minkowski_sum(summands);
    const SumDecomposition base = decompose_faces(ms);
    for (int trial = 0; trial < 20; ++trial) {
      SplitMix64 rng(1000 + trial);
      const SumDecomposition reweighted = decompose_faces(ms, [&rng](int, int) {
        return Rat(1 + static_cast<long long>(rng.below(999)), 1 + static_cast<long long>(rng.below(99)));
      });
      for (std::size_t fi = 0; fi < base.by_face.size(); ++fi) {
        CHECK(base.by_face[fi].parts == reweighted.by_face[fi].parts);
      }
    }
  }
}

TEST_CASE("perturbation: cube + cube reaches general position") {
  const VPolytope cube = fixtures::cube();
  const PerturbResult pr = perturb_to_general_position({cube, cube}, 1);
  CHECK(!pr.identity);
  const MinkowskiSum after = minkowski_sum(pr.rotated);
  CHECK(is_relatively_general_position(decompose_faces(after)));
  // summand f-vectors preserved
  for (const FaceLattice& l : after.summand_lattices) {
    CHECK(f_vector(l).counts == std::vector<long long>{8, 12, 6, 1});
  }
  // face counts never drop below the unperturbed sum's
  const FVector before = f_vector(minkowski_sum({cube, cube}).lattice);
  const FVector now = f_vector(after.lattice);
  for (int k = 0; k <= before.d; ++k) CHECK(now.counts[k] >= before.counts[k]);
}

TEST_CASE("perturbation: square + square becomes an octagon-class polygon") {
  const VPolytope sq = fixtures::square();
  const PerturbResult pr = perturb_to_general_position({sq, sq}, 2);
  const MinkowskiSum after = minkowski_sum(pr.rotated);
  const FVector f = f_vector(after.lattice);
  CHECK(f.counts[0] == 8);  // 4 + 4 edge directions, all distinct
  CHECK(is_relatively_general_position(decompose_faces(after)));
}

TEST_CASE("perturbation is the identity on inputs already in general position") {
  const PerturbResult pr =
      perturb_to_general_position({fixtures::square(), fixtures::diamond()}, 7);
  CHECK(pr.identity);
  CHECK(pr.rotated[0].vertices == hull(fixtures::square().vertices).poly.vertices);
}

TEST_CASE("perturbation needs at least two summands") {
  CHECK_THROWS_AS(perturb_to_general_position({fixtures::square()}, 1), Error);
}
