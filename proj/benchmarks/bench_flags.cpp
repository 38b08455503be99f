#include <benchmark/benchmark.h>

#include "polysum/flags.hpp"
#include "polysum/minkowski.hpp"
#include "polysum/random.hpp"

using namespace polysum;

namespace {

void BM_FaceLattice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MinkowskiSum ms =
      minkowski_sum({rand_polytope(d, 8, 41).poly, rand_polytope(d, 8, 42).poly});
  for (auto _ : state) {
    FaceLattice l = face_lattice(ms.sum);
    benchmark::DoNotOptimize(l.faces.size());
  }
}
BENCHMARK(BM_FaceLattice)->Arg(3)->Arg(4);

void BM_FlagVector(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MinkowskiSum ms =
      minkowski_sum({rand_polytope(d, 8, 51).poly, rand_polytope(d, 8, 52).poly});
  const GradedPoset p = from_face_lattice(ms.lattice);
  for (auto _ : state) {
    FlagVector fv = flag_vector(p);
    benchmark::DoNotOptimize(fv.counts.size());
  }
}
BENCHMARK(BM_FlagVector)->Arg(3)->Arg(4);

void BM_BayerBillera(benchmark::State& state) {
  const MinkowskiSum ms = minkowski_sum({rand_polytope(4, 8, 61).poly, rand_polytope(4, 8, 62).poly});
  const FlagVector fv = flag_vector(from_face_lattice(ms.lattice));
  for (auto _ : state) {
    VerifierReport r = verify_bayer_billera(fv);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_BayerBillera);

}  // namespace

BENCHMARK_MAIN();
