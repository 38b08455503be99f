#include "polysum/flags.hpp"

#include <algorithm>
#include <sstream>

namespace polysum {

namespace {

int sign_pow(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

std::string mask_to_string(std::uint32_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) {
      if (!first) os << ",";
      os << i;
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace

GradedPoset from_face_lattice(const FaceLattice& l) {
  GradedPoset p;
  p.n = static_cast<int>(l.faces.size());
  p.rank.resize(p.n);
  p.up.assign(p.n, VertexSet(p.n));
  const int base = l.bottom_dim;  // -1 for a full lattice
  for (int i = 0; i < p.n; ++i) p.rank[i] = l.faces[i].dim - base;
  p.top_rank = l.d - base;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      const Face& a = l.faces[i];
      const Face& b = l.faces[j];
      bool le;
      if (a.dim < 0) {
        le = true;
      } else if (b.dim < 0) {
        le = false;
      } else {
        le = a.verts.is_subset_of(b.verts);
      }
      if (le) p.up[i].set(j);
    }
  }
  for (int i = 0; i < p.n; ++i) {
    if (p.rank[i] == 0) p.bottom = i;
    if (p.rank[i] == p.top_rank) p.top = i;
  }
  if (p.bottom < 0 || p.top < 0) throw Error("from_face_lattice: missing bottom or top");
  return p;
}

GradedPoset poset_from_covers(const std::vector<int>& ranks,
                              const std::vector<std::pair<int, int>>& covers) {
  GradedPoset p;
  p.n = static_cast<int>(ranks.size());
  if (p.n == 0) throw Error("poset: empty element list");
  p.rank = ranks;
  p.top_rank = *std::max_element(ranks.begin(), ranks.end());
  int bottoms = 0, tops = 0;
  for (int i = 0; i < p.n; ++i) {
    if (p.rank[i] < 0) throw Error("poset: negative rank");
    if (p.rank[i] == 0) {
      p.bottom = i;
      ++bottoms;
    }
    if (p.rank[i] == p.top_rank) {
      p.top = i;
      ++tops;
    }
  }
  if (bottoms != 1) throw Error("poset: bottom element not unique");
  if (tops != 1) throw Error("poset: top element not unique");

  std::vector<std::vector<int>> up_covers(p.n);
  std::vector<int> down_degree(p.n, 0);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= p.n || hi >= p.n) throw Error("poset: cover index out of range");
    if (p.rank[hi] != p.rank[lo] + 1) throw Error("poset: cover must raise rank by exactly 1");
    up_covers[lo].push_back(hi);
    ++down_degree[hi];
  }
  for (int i = 0; i < p.n; ++i) {
    if (i != p.top && up_covers[i].empty()) throw Error("poset: non-top element with no upper cover");
    if (i != p.bottom && down_degree[i] == 0) throw Error("poset: non-bottom element with no lower cover");
  }

  // Reflexive-transitive closure, by descending rank.
  p.up.assign(p.n, VertexSet(p.n));
  std::vector<int> order(p.n);
  for (int i = 0; i < p.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank[a] > p.rank[b]; });
  for (int i : order) {
    p.up[i].set(i);
    for (int j : up_covers[i]) p.up[i] |= p.up[j];
  }
  return p;
}

bool is_eulerian(const GradedPoset& p) {
  std::vector<VertexSet> down(p.n, VertexSet(p.n));
  for (int i = 0; i < p.n; ++i) {
    for (int j = static_cast<int>(p.up[i].find_first()); j != -1;
         j = static_cast<int>(p.up[i].find_next(j))) {
      down[j].set(i);
    }
  }
  VertexSet odd(p.n);
  for (int i = 0; i < p.n; ++i) {
    if (p.rank[i] % 2 != 0) odd.set(i);
  }
  for (int x = 0; x < p.n; ++x) {
    for (int y = static_cast<int>(p.up[x].find_first()); y != -1;
         y = static_cast<int>(p.up[x].find_next(y))) {
      if (p.rank[y] - p.rank[x] < 1) continue;
      VertexSet iv = p.up[x] & down[y];
      const std::size_t odd_count = (iv & odd).count();
      if (2 * odd_count != iv.count()) return false;
    }
  }
  return true;
}

long long FlagVector::f_mask(std::uint32_t mask) const {
  auto it = counts.find(mask);
  if (it == counts.end()) throw Error("flag vector: set out of range " + mask_to_string(mask));
  return it->second;
}

long long FlagVector::f(const std::vector<int>& dims) const {
  std::uint32_t mask = 0;
  for (int t : dims) {
    if (t == -1 || t == d) continue;  // trivial elements extend chains uniquely
    if (t < -1 || t > d) throw Error("flag vector: dimension out of range");
    mask |= (1u << t);
  }
  return f_mask(mask);
}

FlagVector flag_vector(const GradedPoset& p) {
  FlagVector fv;
  fv.d = p.top_rank - 1;
  if (fv.d < 0) throw Error("flag_vector: poset of rank 0");
  std::vector<std::vector<int>> by_dim(fv.d);  // nontrivial elements per dim
  for (int i = 0; i < p.n; ++i) {
    const int dim = p.rank[i] - 1;
    if (dim >= 0 && dim < fv.d) by_dim[dim].push_back(i);
  }
  const std::uint32_t full = fv.d >= 31 ? 0 : (1u << fv.d);
  for (std::uint32_t mask = 0; mask < full || (mask == 0 && full == 0); ++mask) {
    std::vector<int> dims;
    for (int t = 0; t < fv.d; ++t) {
      if (mask & (1u << t)) dims.push_back(t);
    }
    long long total = 0;
    if (dims.empty()) {
      total = 1;  // the empty chain
    } else {
      std::vector<long long> cnt(p.n, 0);
      for (int e : by_dim[dims[0]]) cnt[e] = 1;
      for (std::size_t level = 1; level < dims.size(); ++level) {
        std::vector<long long> next(p.n, 0);
        for (int lo : by_dim[dims[level - 1]]) {
          if (cnt[lo] == 0) continue;
          for (int hi : by_dim[dims[level]]) {
            if (p.leq(lo, hi)) next[hi] += cnt[lo];
          }
        }
        cnt.swap(next);
      }
      for (int e : by_dim[dims.back()]) total += cnt[e];
    }
    fv.counts[mask] = total;
    if (full == 0) break;
  }
  return fv;
}

VerifierReport verify_bayer_billera(const FlagVector& fv) {
  VerifierReport r;
  r.identity = "bayer_billera";
  const int d = fv.d;
  long long instances = 0, failures = 0;
  for (std::uint32_t smask = 0; smask < (1u << d); ++smask) {
    std::vector<int> ext{-1};
    for (int t = 0; t < d; ++t) {
      if (smask & (1u << t)) ext.push_back(t);
    }
    ext.push_back(d);
    for (std::size_t a = 0; a + 1 < ext.size(); ++a) {
      const int i = ext[a], k = ext[a + 1];
      if (i >= k - 1) continue;
      ++instances;
      long long lhs = 0;
      for (int j = i + 1; j <= k - 1; ++j) {
        std::vector<int> dims{j};
        for (int t = 0; t < d; ++t) {
          if (smask & (1u << t)) dims.push_back(t);
        }
        lhs += sign_pow(j - i - 1) * fv.f(dims);
      }
      std::vector<int> sdims;
      for (int t = 0; t < d; ++t) {
        if (smask & (1u << t)) sdims.push_back(t);
      }
      const long long rhs = fv.f(sdims) * (1 - sign_pow(k - i - 1));
      if (lhs != rhs) {
        ++failures;
        std::ostringstream os;
        os << "S=" << mask_to_string(smask) << " (i,k)=(" << i << "," << k << "): " << lhs
           << " != " << rhs;
        r.diagnostics.push_back(os.str());
      }
    }
  }
  r.lhs = Rat(failures);
  r.rhs = 0;
  r.pass = failures == 0;
  std::ostringstream os;
  os << instances << " instances checked";
  r.notes.push_back(os.str());
  return r;
}

VerifierReport verify_dsrshort(const FlagVector& fv, int i, int k) {
  if (i >= k || i < -1 || k > fv.d) throw Error("dsrshort: need -1 <= i < k <= d");
  VerifierReport r;
  r.identity = "dsrshort";
  Rat lhs = 0;
  for (int j = i; j <= k; ++j) {
    lhs += sign_pow(j) * Rat(fv.f({i, j, k}));
  }
  r.lhs = lhs;
  r.rhs = 0;
  r.pass = (lhs == 0);
  std::ostringstream os;
  os << "(i,k)=(" << i << "," << k << ")";
  r.notes.push_back(os.str());
  return r;
}

VerifierReport verify_nestthm(const FlagVector& fv) {
  VerifierReport r;
  r.identity = "nestthm";
  const int d = fv.d;
  Rat lhs = 0;
  for (int k = 0; k <= d - 1; ++k) {
    long long inner = 0;
    for (int i = 0; i <= k; ++i) inner += fv.f({i, i + d - 1 - k});
    inner -= fv.f({k});
    inner -= fv.f({d - 1 - k});
    lhs += sign_pow(k) * k * Rat(inner);
    if (k > 0 && inner != 0) {
      std::ostringstream os;
      os << "k=" << k << ": term " << (sign_pow(k) * k) << " * " << inner;
      r.diagnostics.push_back(os.str());
    }
  }
  r.lhs = lhs;
  r.rhs = 0;
  r.pass = (lhs == 0);
  return r;
}

FVector fvthm_predict(const FlagVector& fv) {
  FVector out;
  out.d = fv.d;
  out.counts.assign(fv.d + 1, 0);
  for (int k = 0; k <= fv.d - 1; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) s += fv.f({i, i + fv.d - 1 - k});
    out.counts[k] = s;
  }
  out.counts[fv.d] = 1;
  return out;
}

}  // namespace polysum
