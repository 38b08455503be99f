#include "polysum/polytope.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "polysum/linalg.hpp"

namespace polysum {

std::size_t vertex_set_hash(const VertexSet& s) {
  std::vector<VertexSet::block_type> blocks;
  boost::to_block_range(s, std::back_inserter(blocks));
  std::size_t h = std::hash<std::size_t>{}(s.size());
  for (auto b : blocks) h ^= std::hash<VertexSet::block_type>{}(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

namespace {

struct SetHash {
  std::size_t operator()(const VertexSet& s) const { return vertex_set_hash(s); }
};

bool set_less(const VertexSet& a, const VertexSet& b) { return a < b; }

}  // namespace

int FaceLattice::index_of(const VertexSet& s) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].verts == s) return static_cast<int>(i);
  }
  return -1;
}

int FaceLattice::bottom_index() const { return 0; }

int FaceLattice::top_index() const { return static_cast<int>(faces.size()) - 1; }

std::vector<long long> FaceLattice::subface_counts(int face_idx) const {
  const Face& f = faces[face_idx];
  if (f.dim < 0) return {};
  std::vector<long long> counts(f.dim + 1, 0);
  for (const Face& g : faces) {
    if (g.dim < 0) continue;
    if (g.verts.is_subset_of(f.verts)) ++counts[g.dim];
  }
  return counts;
}

FaceLattice face_lattice(const HullData& h) {
  const int nv = static_cast<int>(h.poly.vertices.size());
  FaceLattice l;
  l.d = h.dim;
  l.n_vertices = nv;

  std::unordered_set<VertexSet, SetHash> seen;
  std::deque<VertexSet> work;
  VertexSet full(nv);
  full.set();
  seen.insert(full);
  work.push_back(full);
  while (!work.empty()) {
    VertexSet s = std::move(work.front());
    work.pop_front();
    for (const Facet& f : h.facets) {
      VertexSet t = s & f.incident;
      if (seen.insert(t).second) work.push_back(t);
    }
  }
  seen.insert(VertexSet(nv));  // empty face, even for facet-less polytopes

  l.faces.reserve(seen.size());
  for (const VertexSet& s : seen) {
    Face face;
    face.verts = s;
    if (s.none()) {
      face.dim = -1;
    } else if (s.count() == 1) {
      face.dim = 0;
    } else if (s.all() && s.size() > 0) {
      face.dim = h.dim;
    } else {
      std::vector<QVec> pts;
      for (int i = static_cast<int>(s.find_first()); i != -1 && i < nv;
           i = static_cast<int>(s.find_next(i))) {
        pts.push_back(h.poly.vertices[i]);
      }
      face.dim = affine_dim(pts);
    }
    l.faces.push_back(std::move(face));
  }
  std::sort(l.faces.begin(), l.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return set_less(a.verts, b.verts);
  });
  return l;
}

FVector f_vector(const FaceLattice& l) {
  if (l.bottom_dim != -1) throw Error("f_vector: expected a full lattice");
  FVector f;
  f.d = l.d;
  f.counts.assign(l.d + 1, 0);
  for (const Face& face : l.faces) {
    if (face.dim >= 0) ++f.counts[face.dim];
  }
  if (f.counts[l.d] != 1) throw Error("f_vector: lattice top is not unique");
  return f;
}

std::string FVector::display() const {
  std::ostringstream os;
  os << "(";
  if (d == 0) {
    os << counts[0];
  } else {
    for (int k = 0; k < d; ++k) {
      if (k) os << ", ";
      os << counts[k];
    }
  }
  os << ")";
  return os.str();
}

VerifierReport euler_check(const FVector& f) {
  VerifierReport r;
  r.identity = "euler";
  Rat lhs = 0;
  for (int k = 0; k < f.d; ++k) {
    lhs += (k % 2 == 0 ? 1 : -1) * Rat(f.counts[k]);
  }
  r.lhs = lhs;
  r.rhs = Rat(1) - (f.d % 2 == 0 ? Rat(1) : Rat(-1));
  r.pass = (r.lhs == r.rhs);
  r.diagnostics.push_back("f = " + f.display());
  return r;
}

FaceLattice interval(const FaceLattice& l, int g_idx, int f_idx) {
  const Face& g = l.faces[g_idx];
  const Face& f = l.faces[f_idx];
  const bool contained = g.dim < 0 || g.verts.is_subset_of(f.verts);
  if (!contained || (g.dim >= 0 && f.dim < 0)) throw Error("interval: g is not a subface of f");
  FaceLattice out;
  out.d = f.dim;
  out.bottom_dim = g.dim;
  out.n_vertices = l.n_vertices;
  for (const Face& h : l.faces) {
    const bool above_g = g.dim < 0 ? true : (h.dim >= 0 && g.verts.is_subset_of(h.verts));
    const bool below_f = h.dim < 0 ? (g.dim < 0) : h.verts.is_subset_of(f.verts);
    if (above_g && below_f) out.faces.push_back(h);
  }
  return out;
}

Rat CharPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

CharPoly CharPoly::derivative() const {
  CharPoly d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.coeffs.push_back(BigInt(i) * coeffs[i]);
  d.trim();
  return d;
}

CharPoly CharPoly::operator*(const CharPoly& other) const {
  CharPoly p;
  if (coeffs.empty() || other.coeffs.empty()) return p;
  p.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs.size(); ++j) p.coeffs[i + j] += coeffs[i] * other.coeffs[j];
  }
  p.trim();
  return p;
}

CharPoly CharPoly::operator+(const CharPoly& other) const {
  CharPoly p;
  p.coeffs.assign(std::max(coeffs.size(), other.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < other.coeffs.size(); ++i) p.coeffs[i] += other.coeffs[i];
  p.trim();
  return p;
}

CharPoly CharPoly::operator-(const CharPoly& other) const {
  CharPoly p;
  p.coeffs.assign(std::max(coeffs.size(), other.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < other.coeffs.size(); ++i) p.coeffs[i] -= other.coeffs[i];
  p.trim();
  return p;
}

void CharPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string CharPoly::display() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << (coeffs[i] > 0 ? " + " : " - ");
    else if (coeffs[i] < 0) os << "-";
    BigInt a = boost::multiprecision::abs(coeffs[i]);
    if (i == 0 || a != 1) os << a.str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CharPoly char_poly(const FVector& f) {
  CharPoly p;
  for (long long c : f.counts) p.coeffs.push_back(BigInt(c));
  p.trim();
  return p;
}

HullData polar_dual(const HullData& h) {
  if (h.dim != h.poly.ambient_dim) {
    throw Error("polar_dual: polytope is not full-dimensional, origin cannot be interior");
  }
  std::vector<QVec> dual_points;
  for (const Facet& f : h.facets) {
    if (f.offset <= 0) {
      std::ostringstream os;
      os << "polar_dual: origin not strictly interior; separating facet normal (";
      for (std::size_t i = 0; i < f.normal.size(); ++i) {
        if (i) os << ", ";
        os << f.normal[i];
      }
      os << "), offset " << f.offset;
      throw Error(os.str());
    }
    dual_points.push_back(vec_scale(Rat(1) / f.offset, f.normal));
  }
  HullData dual = hull(dual_points);
  if (dual.poly.vertices.size() != h.facets.size()) {
    throw Error("polar_dual: facet/vertex correspondence broken (internal)");
  }
  if (!h.poly.name.empty()) dual.poly.name = h.poly.name + "_dual";
  return dual;
}

int dual_face_map(const HullData& p, const FaceLattice& l, const HullData& dual,
                  const FaceLattice& l_dual, int face_idx) {
  const Face& f = l.faces[face_idx];
  if (f.dim < 0 || f.dim >= l.d) throw Error("dual_face_map: face must be nontrivial");
  const int ndv = static_cast<int>(dual.poly.vertices.size());
  VertexSet dset(ndv);
  for (int j = 0; j < ndv; ++j) {
    bool on_all = true;
    for (int v = static_cast<int>(f.verts.find_first()); v != -1 && on_all;
         v = static_cast<int>(f.verts.find_next(v))) {
      if (dot(dual.poly.vertices[j], p.poly.vertices[v]) != 1) on_all = false;
    }
    if (on_all) dset.set(j);
  }
  const int idx = l_dual.index_of(dset);
  if (idx < 0) throw Error("dual_face_map: dual vertex set is not a face (internal)");
  if (l_dual.faces[idx].dim != l.d - 1 - f.dim) {
    throw Error("dual_face_map: dual dimension mismatch (internal)");
  }
  return idx;
}

}  // namespace polysum
