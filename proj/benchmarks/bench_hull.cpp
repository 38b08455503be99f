#include <benchmark/benchmark.h>

#include "polysum/minkowski.hpp"
#include "polysum/polytope.hpp"
#include "polysum/random.hpp"

using namespace polysum;

namespace {

std::vector<QVec> random_points(int d, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<QVec> pts(n, QVec(d));
  for (QVec& p : pts) {
    for (Rat& x : p) x = Rat(rng.signed_below(4096), 4096);
  }
  return pts;
}

void BM_HullRandom(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto pts = random_points(d, n, 7);
  for (auto _ : state) {
    HullData h = hull(pts);
    benchmark::DoNotOptimize(h.facets.size());
  }
}
BENCHMARK(BM_HullRandom)->Args({2, 64})->Args({3, 64})->Args({3, 256})->Args({4, 128});

void BM_MinkowskiSumPair(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const VPolytope a = rand_polytope(d, 8, 21).poly;
  const VPolytope b = rand_polytope(d, 8, 22).poly;
  for (auto _ : state) {
    MinkowskiSum ms = minkowski_sum({a, b});
    benchmark::DoNotOptimize(ms.lattice.faces.size());
  }
}
BENCHMARK(BM_MinkowskiSumPair)->Arg(2)->Arg(3)->Arg(4);

void BM_DecomposeFaces(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MinkowskiSum ms =
      minkowski_sum({rand_polytope(d, 8, 31).poly, rand_polytope(d, 8, 32).poly});
  for (auto _ : state) {
    SumDecomposition sd = decompose_faces(ms);
    benchmark::DoNotOptimize(sd.by_face.size());
  }
}
BENCHMARK(BM_DecomposeFaces)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
