#pragma once

#include <cstdint>

#include "polysum/polytope.hpp"

namespace polysum {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that identical seeds give identical streams on every
/// platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); modulo bias is irrelevant here, determinism
  /// is what matters.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Integer in [-m, m].
  long long signed_below(long long m) {
    return static_cast<long long>(below(2 * static_cast<std::uint64_t>(m) + 1)) - m;
  }
};

/// Hull of n seeded random points with coordinates k/2^12 in [-1,1],
/// resampled until the point set is full-dimensional.
HullData rand_polytope(int d, int n_points, std::uint64_t seed);

/// Random polytope of dimension `dim` embedded in ambient dimension d and
/// generically rotated. Used for mixed-dimension sums.
HullData rand_lowdim_polytope(int d, int dim, int n_points, std::uint64_t seed);

}  // namespace polysum
