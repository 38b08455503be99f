#include "polysum/centered.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polysum/feasibility.hpp"
#include "polysum/flags.hpp"
#include "polysum/linalg.hpp"
#include "polysum/minkowski.hpp"

namespace polysum {

namespace {

std::string face_label(const FaceLattice& l, int idx) {
  std::ostringstream os;
  const Face& f = l.faces[idx];
  os << "dim-" << f.dim << " face {";
  bool first = true;
  for (int v = static_cast<int>(f.verts.find_first()); v != -1;
       v = static_cast<int>(f.verts.find_next(v))) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

VerifierReport is_perfectly_centered(const HullData& h, const FaceLattice& l) {
  if (h.dim != h.poly.ambient_dim) throw Error("is_perfectly_centered: polytope must be full-dimensional");
  VerifierReport r;
  r.identity = "perfectly_centered";
  r.rhs = 0;

  for (const Facet& f : h.facets) {
    if (f.offset <= 0) {
      r.lhs = 1;
      r.pass = false;
      r.diagnostics.push_back("origin not strictly interior (facet offset " +
                              rat_to_string(f.offset) + ")");
      return r;
    }
  }

  const int d = h.dim;
  long long failing = 0;
  for (std::size_t fi = 0; fi < l.faces.size(); ++fi) {
    const Face& face = l.faces[fi];
    if (face.dim < 0) continue;
    std::vector<int> vids;
    for (int v = static_cast<int>(face.verts.find_first()); v != -1;
         v = static_cast<int>(face.verts.find_next(v))) {
      vids.push_back(v);
    }
    std::vector<QVec> gens;
    for (const Facet& facet : h.facets) {
      if (face.verts.is_subset_of(facet.incident)) gens.push_back(facet.normal);
    }
    // Variables (lambda_1..lambda_m, mu_1..mu_g):
    //   sum lambda_j v_j - sum mu_t n_t = 0,  sum lambda_j = 1,
    //   lambda_j > 0,  mu_t >= 0.
    const int m = static_cast<int>(vids.size());
    const int g = static_cast<int>(gens.size());
    const int nvars = m + g;
    QMat eqs;
    for (int coord = 0; coord < d; ++coord) {
      QVec row(nvars + 1, Rat(0));
      for (int j = 0; j < m; ++j) row[j] = h.poly.vertices[vids[j]][coord];
      for (int t = 0; t < g; ++t) row[m + t] = -gens[t][coord];
      eqs.push_back(std::move(row));
    }
    {
      QVec row(nvars + 1, Rat(0));
      for (int j = 0; j < m; ++j) row[j] = 1;
      row[nvars] = 1;
      eqs.push_back(std::move(row));
    }
    QMat strict;
    for (int j = 0; j < m; ++j) {
      QVec row(nvars + 1, Rat(0));
      row[j] = 1;
      strict.push_back(std::move(row));
    }
    QMat weak;
    for (int t = 0; t < g; ++t) {
      QVec row(nvars + 1, Rat(0));
      row[m + t] = 1;
      weak.push_back(std::move(row));
    }
    if (!solve_strict_feasibility(eqs, strict, weak)) {
      ++failing;
      r.diagnostics.push_back("relint(F) misses N(F;P) for " + face_label(l, static_cast<int>(fi)));
    }
  }
  r.lhs = Rat(failing);
  r.pass = (failing == 0);
  return r;
}

PcSumLattice pc_sum_lattice(const HullData& h, const FaceLattice& l) {
  const VerifierReport pc = is_perfectly_centered(h, l);
  if (!pc.pass) throw Error("pc_sum_lattice: polytope is not perfectly centered");
  const int d = h.dim;

  const HullData dual = polar_dual(h);
  const FaceLattice l_dual = face_lattice(dual);

  struct Realized {
    int g, f;
    std::vector<QVec> verts;  // sorted vertex points of conv(G + F^D)
    int dim;
  };
  std::vector<Realized> realized;
  for (std::size_t gi = 0; gi < l.faces.size(); ++gi) {
    const Face& gf = l.faces[gi];
    if (gf.dim < 0 || gf.dim >= l.d) continue;
    for (std::size_t fi = 0; fi < l.faces.size(); ++fi) {
      const Face& ff = l.faces[fi];
      if (ff.dim < 0 || ff.dim >= l.d) continue;
      if (!gf.verts.is_subset_of(ff.verts)) continue;
      const int dual_idx = dual_face_map(h, l, dual, l_dual, static_cast<int>(fi));
      const Face& fd = l_dual.faces[dual_idx];
      std::vector<QVec> pts;
      for (int a = static_cast<int>(gf.verts.find_first()); a != -1;
           a = static_cast<int>(gf.verts.find_next(a))) {
        for (int b = static_cast<int>(fd.verts.find_first()); b != -1;
             b = static_cast<int>(fd.verts.find_next(b))) {
          pts.push_back(vec_add(h.poly.vertices[a], dual.poly.vertices[b]));
        }
      }
      HullData mini = hull(pts);
      Realized rz;
      rz.g = static_cast<int>(gi);
      rz.f = static_cast<int>(fi);
      rz.verts = mini.poly.vertices;
      rz.dim = mini.dim;
      // dim additivity of the chain decomposition
      if (rz.dim != gf.dim + (d - 1 - ff.dim)) {
        throw Error("pc_sum_lattice: realized face dimension is not dim(G)+dim(F^D)");
      }
      realized.push_back(std::move(rz));
    }
  }

  // Global vertex list: realized 0-faces.
  std::vector<QVec> verts;
  for (const Realized& rz : realized) {
    if (rz.dim == 0) verts.push_back(rz.verts[0]);
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int nv = static_cast<int>(verts.size());
  auto vertex_index = [&](const QVec& p) -> int {
    const auto it = std::lower_bound(verts.begin(), verts.end(), p, lex_less);
    if (it == verts.end() || *it != p) return -1;
    return static_cast<int>(it - verts.begin());
  };

  PcSumLattice out;
  out.poly.ambient_dim = h.poly.ambient_dim;
  out.poly.vertices = verts;
  if (!h.poly.name.empty()) out.poly.name = h.poly.name + "_plus_dual";

  std::map<VertexSet, std::pair<int, std::vector<std::pair<int, int>>>> face_sets;  // set -> (dim, chains)
  for (const Realized& rz : realized) {
    VertexSet s(nv);
    for (const QVec& p : rz.verts) {
      const int id = vertex_index(p);
      if (id < 0) throw Error("pc_sum_lattice: realized face vertex is not a realized 0-face");
      s.set(id);
    }
    auto [it, inserted] = face_sets.try_emplace(s, std::make_pair(rz.dim, std::vector<std::pair<int, int>>{}));
    if (!inserted) {
      // (G,F) -> H must be injective
      throw Error("pc_sum_lattice: two chains realize the same face");
    }
    it->second.second.push_back({rz.g, rz.f});
  }

  FaceLattice lat;
  lat.n_vertices = nv;
  lat.d = affine_dim(verts);
  if (lat.d != d) throw Error("pc_sum_lattice: realized sum has wrong dimension");
  {
    Face bottom;
    bottom.verts = VertexSet(nv);
    bottom.dim = -1;
    lat.faces.push_back(std::move(bottom));
  }
  for (const auto& [s, info] : face_sets) {
    Face f;
    f.verts = s;
    f.dim = info.first;
    lat.faces.push_back(std::move(f));
  }
  {
    Face top;
    top.verts = VertexSet(nv);
    top.verts.set();
    top.dim = d;
    lat.faces.push_back(std::move(top));
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });

  // Count validation against the flag-vector prediction.
  const FVector predicted = fvthm_predict(flag_vector(from_face_lattice(l)));
  const FVector assembled = f_vector(lat);
  if (!(assembled == predicted)) {
    throw Error("pc_sum_lattice: realized face counts " + assembled.display() +
                " do not match flag prediction " + predicted.display());
  }

  out.lattice = lat;
  for (const Realized& rz : realized) {
    VertexSet s(nv);
    for (const QVec& p : rz.verts) s.set(vertex_index(p));
    PcSumFace pf;
    pf.g = rz.g;
    pf.f = rz.f;
    pf.realized = out.lattice.index_of(s);
    out.provenance.push_back(pf);
  }
  return out;
}

VerifierReport verify_fvthm(const HullData& h, const FaceLattice& l) {
  VerifierReport r;
  r.identity = "fvthm";
  const FVector predicted = fvthm_predict(flag_vector(from_face_lattice(l)));
  const FVector realized = f_vector(pc_sum_lattice(h, l).lattice);
  const HullData dual = polar_dual(h);
  const MinkowskiSum direct = minkowski_sum({h.poly, dual.poly});
  const FVector direct_f = f_vector(direct.lattice);
  long long mismatches = 0;
  if (!(predicted == realized)) ++mismatches;
  if (!(predicted == direct_f)) ++mismatches;
  r.lhs = Rat(mismatches);
  r.rhs = 0;
  r.pass = (mismatches == 0);
  r.diagnostics.push_back("flag prediction: " + predicted.display());
  r.diagnostics.push_back("realized lattice: " + realized.display());
  r.diagnostics.push_back("direct sum:      " + direct_f.display());
  return r;
}

VerifierReport verify_mainthm_pc(const FaceLattice& l) {
  VerifierReport r = verify_nestthm(flag_vector(from_face_lattice(l)));
  r.identity = "mainthm_pc";
  r.notes.push_back("evaluated on the polytope's flag vector only");
  return r;
}

}  // namespace polysum
