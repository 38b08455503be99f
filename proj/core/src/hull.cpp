#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "polysum/linalg.hpp"
#include "polysum/polytope.hpp"

namespace polysum {

namespace {

// ---------------------------------------------------------------------------
// Affine chart: exact coordinates on the affine hull of the input points.
// For full-dimensional input the chart is the identity.
// ---------------------------------------------------------------------------

struct Chart {
  int ambient = 0;
  int k = 0;
  bool is_identity = false;
  QVec origin;
  QMat basis;  // ambient x k; columns span the direction space
  std::vector<int> pivot_rows;
  QMat pivot_inv;  // inverse of the pivot-row submatrix
  QMat mtm_inv;    // (M^T M)^{-1}, for mapping normals back

  QVec to_local(const QVec& p) const {
    if (is_identity) return p;
    QVec rhs(k);
    for (int i = 0; i < k; ++i) rhs[i] = p[pivot_rows[i]] - origin[pivot_rows[i]];
    QVec lam = mat_vec(pivot_inv, rhs);
    for (int r = 0; r < ambient; ++r) {
      Rat v = 0;
      for (int j = 0; j < k; ++j) v += basis[r][j] * lam[j];
      if (v != p[r] - origin[r]) throw Error("hull: point outside affine hull");
    }
    return lam;
  }

  // Ambient functional agreeing with the local one on the hull and lying in
  // the direction space: c = M (M^T M)^{-1} nu.
  QVec normal_to_ambient(const QVec& nu) const {
    if (is_identity) return nu;
    QVec w = mat_vec(mtm_inv, nu);
    QVec c(ambient);
    for (int r = 0; r < ambient; ++r) {
      Rat v = 0;
      for (int j = 0; j < k; ++j) v += basis[r][j] * w[j];
      c[r] = v;
    }
    return c;
  }
};

Chart build_chart(const std::vector<QVec>& pts, int k) {
  Chart ch;
  ch.ambient = static_cast<int>(pts[0].size());
  ch.k = k;
  ch.origin = pts[0];
  if (k == ch.ambient) {
    ch.is_identity = true;
    return ch;
  }
  // Greedy basis of difference vectors.
  QMat rows;  // k x ambient
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(rows.size()) < k; ++i) {
    QMat trial = rows;
    trial.push_back(vec_sub(pts[i], pts[0]));
    if (rank(trial) == static_cast<int>(trial.size())) rows = std::move(trial);
  }
  if (static_cast<int>(rows.size()) != k) throw Error("hull: affine basis extraction failed");
  ch.basis = transpose(rows);  // ambient x k
  // Pivot rows: k coordinates on which the basis is invertible.
  {
    QMat m = rows;  // eliminate to find pivot columns
    const int cols = ch.ambient;
    int r = 0;
    for (int c = 0; c < cols && r < k; ++c) {
      int pivot = -1;
      for (int i = r; i < k; ++i) {
        if (m[i][c] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(m[r], m[pivot]);
      const Rat inv = Rat(1) / m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] *= inv;
      for (int i = 0; i < k; ++i) {
        if (i == r || m[i][c] == 0) continue;
        const Rat f = m[i][c];
        for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
      ch.pivot_rows.push_back(c);
      ++r;
    }
    if (r != k) throw Error("hull: pivot extraction failed");
  }
  QMat pivot_sub(k, QVec(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) pivot_sub[i][j] = ch.basis[ch.pivot_rows[i]][j];
  }
  auto inv = inverse(pivot_sub);
  if (!inv) throw Error("hull: pivot submatrix singular");
  ch.pivot_inv = std::move(*inv);
  QMat mtm = mat_mul(rows, ch.basis);  // (M^T)(M), k x k
  auto mtm_inverse = inverse(mtm);
  if (!mtm_inverse) throw Error("hull: gram matrix singular");
  ch.mtm_inv = std::move(*mtm_inverse);
  return ch;
}

// ---------------------------------------------------------------------------
// Incremental hull on integer points of full affine dimension k >= 2.
// The boundary is kept as a simplicial complex; coplanar adjacent cells are
// allowed and merged into facets at the end. Strict visibility (sigma > 0)
// keeps the complex a triangulation of the true hull boundary under all
// degeneracies; a new cell is never degenerate because a horizon ridge of a
// visible cell cannot contain the inserted point in its affine hull.
// ---------------------------------------------------------------------------

struct Cell {
  std::vector<int> v;  // k sorted point ids
  IVec normal;         // primitive, outer
  BigInt offset;
  std::vector<int> nbr;  // nbr[t]: cell across the ridge omitting v[t]
  bool dead = false;
};

class IncrementalHull {
 public:
  IncrementalHull(int k, std::vector<IVec> pts) : k_(k), pts_(std::move(pts)) {}

  void run() {
    std::vector<int> simplex = initial_simplex();
    interior_sum_.assign(k_, BigInt(0));
    for (int id : simplex) {
      for (int j = 0; j < k_; ++j) interior_sum_[j] += pts_[id][j];
    }
    interior_den_ = k_ + 1;
    std::vector<char> in_simplex(pts_.size(), 0);
    for (int id : simplex) in_simplex[id] = 1;
    for (int omit = 0; omit <= k_; ++omit) {
      std::vector<int> verts;
      for (int t = 0; t <= k_; ++t) {
        if (t != omit) verts.push_back(simplex[t]);
      }
      add_cell(std::move(verts));
    }
    link_all_new_cells();
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (!in_simplex[i]) insert(static_cast<int>(i));
    }
  }

  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<IVec>& points() const { return pts_; }

 private:
  std::vector<int> initial_simplex() {
    std::vector<int> chosen{0};
    IMat diffs;
    for (std::size_t i = 1; i < pts_.size() && static_cast<int>(chosen.size()) < k_ + 1; ++i) {
      IMat trial = diffs;
      IVec row(k_);
      for (int j = 0; j < k_; ++j) row[j] = pts_[i][j] - pts_[0][j];
      trial.push_back(std::move(row));
      if (rank(trial) == static_cast<int>(trial.size())) {
        diffs = std::move(trial);
        chosen.push_back(static_cast<int>(i));
      }
    }
    if (static_cast<int>(chosen.size()) != k_ + 1) throw Error("hull: initial simplex not found");
    return chosen;
  }

  BigInt sigma(const Cell& c, int pid) const {
    BigInt s = -c.offset;
    for (int j = 0; j < k_; ++j) s += c.normal[j] * pts_[pid][j];
    return s;
  }

  // Creates a cell on the hyperplane through `verts` (k affinely independent
  // points), oriented away from the interior reference point.
  int add_cell(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    IMat rows(k_ - 1, IVec(k_));
    for (int i = 1; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) rows[i - 1][j] = pts_[verts[i]][j] - pts_[verts[0]][j];
    }
    IVec n(k_);
    bool nonzero = false;
    for (int j = 0; j < k_; ++j) {
      IMat minor(k_ - 1, IVec(k_ - 1));
      for (int a = 0; a < k_ - 1; ++a) {
        int cc = 0;
        for (int b = 0; b < k_; ++b) {
          if (b == j) continue;
          minor[a][cc++] = rows[a][b];
        }
      }
      BigInt det = determinant(minor);
      n[j] = (j % 2 == 0) ? det : -det;
      if (n[j] != 0) nonzero = true;
    }
    if (!nonzero) throw Error("hull: degenerate cell");
    BigInt g = 0;
    for (const BigInt& x : n) g = boost::multiprecision::gcd(g, x);
    if (g > 1) {
      for (BigInt& x : n) x /= g;
    }
    BigInt b = 0;
    for (int j = 0; j < k_; ++j) b += n[j] * pts_[verts[0]][j];
    BigInt side = -b * interior_den_;
    for (int j = 0; j < k_; ++j) side += n[j] * interior_sum_[j];
    if (side == 0) throw Error("hull: interior point on cell hyperplane");
    if (side > 0) {
      for (BigInt& x : n) x = -x;
      b = -b;
    }
    Cell c;
    c.v = std::move(verts);
    c.normal = std::move(n);
    c.offset = std::move(b);
    c.nbr.assign(k_, -1);
    cells_.push_back(std::move(c));
    const int id = static_cast<int>(cells_.size()) - 1;
    new_cells_.push_back(id);
    return id;
  }

  // Pairs up ridges among freshly added cells (slots still -1).
  void link_all_new_cells() {
    std::map<std::vector<int>, std::pair<int, int>> open_ridge;
    for (int id : new_cells_) {
      Cell& c = cells_[id];
      for (int t = 0; t < k_; ++t) {
        if (c.nbr[t] != -1) continue;
        std::vector<int> ridge;
        for (int u = 0; u < k_; ++u) {
          if (u != t) ridge.push_back(c.v[u]);
        }
        auto it = open_ridge.find(ridge);
        if (it == open_ridge.end()) {
          open_ridge.emplace(std::move(ridge), std::make_pair(id, t));
        } else {
          auto [oid, ot] = it->second;
          cells_[oid].nbr[ot] = id;
          c.nbr[t] = oid;
          open_ridge.erase(it);
        }
      }
    }
    if (!open_ridge.empty()) throw Error("hull: unmatched ridge (topology bug)");
    new_cells_.clear();
  }

  void insert(int pid) {
    const int ncells = static_cast<int>(cells_.size());
    std::vector<char> visible(ncells, 0);
    bool any = false;
    for (int i = 0; i < ncells; ++i) {
      if (cells_[i].dead) continue;
      if (sigma(cells_[i], pid) > 0) {
        visible[i] = 1;
        any = true;
      }
    }
    if (!any) return;  // inside or on the current hull: not a vertex
    for (int f = 0; f < ncells; ++f) {
      if (!visible[f]) continue;
      for (int t = 0; t < k_; ++t) {
        const int g = cells_[f].nbr[t];
        if (g < 0 || visible[g]) continue;
        // Horizon ridge between visible f and surviving g.
        std::vector<int> verts;
        for (int u = 0; u < k_; ++u) {
          if (u != t) verts.push_back(cells_[f].v[u]);
        }
        verts.push_back(pid);
        const int nid = add_cell(std::move(verts));
        // Outer adjacency: the old ridge is the new cell's ridge omitting pid.
        int pslot = -1;
        for (int u = 0; u < k_; ++u) {
          if (cells_[nid].v[u] == pid) pslot = u;
        }
        cells_[nid].nbr[pslot] = g;
        Cell& gc = cells_[g];
        for (int u = 0; u < k_; ++u) {
          if (gc.nbr[u] == f) {
            // Identify the shared ridge by vertex set, not merely by the
            // neighbor id (g may touch f across several ridges is impossible
            // for distinct simplices, so the id check suffices).
            gc.nbr[u] = nid;
            break;
          }
        }
      }
    }
    for (int f = 0; f < ncells; ++f) {
      if (visible[f]) cells_[f].dead = true;
    }
    link_all_new_cells();
  }

  int k_;
  std::vector<IVec> pts_;
  IVec interior_sum_;
  BigInt interior_den_ = 1;
  std::vector<Cell> cells_;
  std::vector<int> new_cells_;
};

IVec rat_vec_to_int(const QVec& v, const BigInt& scale) {
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = BigInt(numerator(v[i])) * (scale / BigInt(denominator(v[i])));
  }
  return out;
}

struct LocalFacet {
  IVec normal;
  BigInt offset;
  std::vector<int> incident;  // local point ids on the hyperplane
};

// Canonical positive scaling only; outer orientation is preserved.
QVec primitive_rat_normal(const QVec& v) {
  IVec w = primitive_integer_vector(v);
  QVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = Rat(w[i]);
  return out;
}

}  // namespace

HullData hull(const std::vector<QVec>& points) {
  if (points.empty()) throw Error("hull: empty point list");
  const int ambient = static_cast<int>(points[0].size());
  for (const QVec& p : points) {
    if (static_cast<int>(p.size()) != ambient) throw Error("hull: mixed ambient dimensions");
  }

  std::vector<QVec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullData out;
  out.poly.ambient_dim = ambient;

  const int k = affine_dim(pts);
  out.dim = k;

  Chart chart = build_chart(pts, k);

  // Affine hull equations (primitive, deterministic order).
  if (k < ambient) {
    QMat mt;  // k x ambient = transpose of basis; for k == 0 use empty -> all e_i
    std::vector<QVec> eq_normals;
    if (k == 0) {
      for (int i = 0; i < ambient; ++i) {
        QVec e(ambient);
        e[i] = 1;
        eq_normals.push_back(std::move(e));
      }
    } else {
      mt = transpose(chart.basis);
      eq_normals = nullspace(mt);
    }
    for (QVec& a : eq_normals) {
      QVec n = primitive_rat_normal(a);
      for (Rat& x : n) {
        if (x != 0) {
          if (x < 0) {
            for (Rat& y : n) y = -y;
          }
          break;
        }
      }
      out.hull_equations.push_back({n, dot(n, pts[0])});
    }
    std::sort(out.hull_equations.begin(), out.hull_equations.end(),
              [](const LinearEquation& a, const LinearEquation& b) {
                if (a.normal != b.normal) return lex_less(a.normal, b.normal);
                return a.offset < b.offset;
              });
  }

  if (k == 0) {
    out.poly.vertices = {pts[0]};
    return out;
  }

  // Local integer coordinates (common positive scale; combinatorially inert).
  std::vector<QVec> local(pts.size());
  BigInt scale = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    local[i] = chart.to_local(pts[i]);
    for (const Rat& x : local[i]) scale = boost::multiprecision::lcm(scale, BigInt(denominator(x)));
  }
  std::vector<IVec> ipts(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ipts[i] = rat_vec_to_int(local[i], scale);

  std::vector<LocalFacet> lfacets;
  std::vector<int> boundary_ids;

  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(ipts.size()); ++i) {
      if (ipts[i][0] < ipts[lo][0]) lo = i;
      if (ipts[i][0] > ipts[hi][0]) hi = i;
    }
    lfacets.push_back({IVec{BigInt(1)}, ipts[hi][0], {hi}});
    lfacets.push_back({IVec{BigInt(-1)}, -ipts[lo][0], {lo}});
    boundary_ids = {lo, hi};
  } else {
    IncrementalHull ih(k, ipts);
    ih.run();

    std::map<std::pair<IVec, BigInt>, std::vector<int>> groups;
    std::vector<char> on_boundary(ipts.size(), 0);
    for (const Cell& c : ih.cells()) {
      if (c.dead) continue;
      auto& members = groups[{c.normal, c.offset}];
      for (int id : c.v) {
        members.push_back(id);
        on_boundary[id] = 1;
      }
    }
    for (auto& [key, members] : groups) {
      LocalFacet f;
      f.normal = key.first;
      f.offset = key.second;
      lfacets.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < ipts.size(); ++i) {
      if (on_boundary[i]) boundary_ids.push_back(static_cast<int>(i));
    }
    // Incidence of boundary points with facet hyperplanes, exact.
    for (LocalFacet& f : lfacets) {
      for (int id : boundary_ids) {
        BigInt s = -f.offset;
        for (int j = 0; j < k; ++j) s += f.normal[j] * ipts[id][j];
        if (s == 0) f.incident.push_back(id);
        if (s > 0) throw Error("hull: facet hyperplane violated (internal)");
      }
    }
  }

  // True vertices: boundary points whose incident facet normals span R^k.
  std::vector<std::vector<int>> facets_of_point(ipts.size());
  for (std::size_t fi = 0; fi < lfacets.size(); ++fi) {
    for (int id : lfacets[fi].incident) facets_of_point[id].push_back(static_cast<int>(fi));
  }
  std::vector<int> vertex_ids;
  for (int id : boundary_ids) {
    IMat normals;
    for (int fi : facets_of_point[id]) normals.push_back(lfacets[fi].normal);
    if (!normals.empty() && rank(normals) == k) vertex_ids.push_back(id);
  }
  if (vertex_ids.empty()) throw Error("hull: no vertices (internal)");

  // Canonical ambient order.
  std::sort(vertex_ids.begin(), vertex_ids.end(),
            [&](int a, int b) { return lex_less(pts[a], pts[b]); });
  std::vector<int> local_to_final(ipts.size(), -1);
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    out.poly.vertices.push_back(pts[vertex_ids[i]]);
    local_to_final[vertex_ids[i]] = static_cast<int>(i);
  }
  const int nv = static_cast<int>(out.poly.vertices.size());

  for (const LocalFacet& lf : lfacets) {
    Facet f;
    QVec nu(lf.normal.size());
    for (std::size_t j = 0; j < lf.normal.size(); ++j) nu[j] = Rat(lf.normal[j]);
    f.normal = primitive_rat_normal(chart.normal_to_ambient(nu));
    f.incident.resize(nv);
    bool offset_set = false;
    for (int id : lf.incident) {
      const int fid = local_to_final[id];
      if (fid < 0) continue;  // demoted point: on the hyperplane, not a vertex
      f.incident.set(fid);
      if (!offset_set) {
        f.offset = dot(f.normal, out.poly.vertices[fid]);
        offset_set = true;
      }
    }
    if (!offset_set) throw Error("hull: facet without vertices (internal)");
    // The facet invariant: equality exactly on incident vertices, strict
    // inequality elsewhere. Verified, not assumed.
    for (int i = 0; i < nv; ++i) {
      const Rat v = dot(f.normal, out.poly.vertices[i]);
      if (f.incident.test(i)) {
        if (v != f.offset) throw Error("hull: incident vertex off facet (internal)");
      } else if (v >= f.offset) {
        throw Error("hull: non-incident vertex not strictly inside (internal)");
      }
    }
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });
  return out;
}

}  // namespace polysum
