#include "polysum/random.hpp"

#include "polysum/linalg.hpp"
#include "polysum/minkowski.hpp"

namespace polysum {

namespace {

constexpr long long kGrid = 4096;  // coordinates k/4096 in [-1, 1]
constexpr int kMaxResamples = 64;

std::vector<QVec> sample_points(int d, int n, SplitMix64& rng) {
  std::vector<QVec> pts(n, QVec(d));
  for (QVec& p : pts) {
    for (Rat& x : p) x = Rat(BigInt(rng.signed_below(kGrid)), BigInt(kGrid));
  }
  return pts;
}

}  // namespace

HullData rand_polytope(int d, int n_points, std::uint64_t seed) {
  if (d < 1 || d > 4) throw Error("rand_polytope: d must be in 1..4");
  if (n_points < d + 1) throw Error("rand_polytope: need at least d+1 points");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<QVec> pts = sample_points(d, n_points, rng);
    if (affine_dim(pts) != d) continue;
    HullData h = hull(pts);
    h.poly.name = "rand_d" + std::to_string(d) + "_s" + std::to_string(seed);
    return h;
  }
  throw Error("rand_polytope: could not sample a full-dimensional point set");
}

HullData rand_lowdim_polytope(int d, int dim, int n_points, std::uint64_t seed) {
  if (dim < 1 || dim > d) throw Error("rand_lowdim_polytope: need 1 <= dim <= d");
  if (n_points < dim + 1) throw Error("rand_lowdim_polytope: need at least dim+1 points");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<QVec> pts = sample_points(dim, n_points, rng);
    if (affine_dim(pts) != dim) continue;
    const QMat q = cayley_rotation(d, rng.next(), 0);
    std::vector<QVec> embedded;
    for (const QVec& p : pts) {
      QVec e(d, Rat(0));
      for (int i = 0; i < dim; ++i) e[i] = p[i];
      embedded.push_back(mat_vec(q, e));
    }
    HullData h = hull(embedded);
    h.poly.name = "rand_d" + std::to_string(dim) + "in" + std::to_string(d) + "_s" + std::to_string(seed);
    return h;
  }
  throw Error("rand_lowdim_polytope: could not sample a full-dimensional point set");
}

}  // namespace polysum
