#include "polysum/minkowski.hpp"

#include <algorithm>
#include <sstream>

#include "polysum/linalg.hpp"
#include "polysum/random.hpp"

namespace polysum {

namespace {

int sign_pow(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

VertexSet argmax_set(const std::vector<QVec>& points, const QVec& w) {
  VertexSet best(points.size());
  Rat best_val;
  bool have = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rat v = dot(w, points[i]);
    if (!have || v > best_val) {
      best_val = v;
      best.reset();
      best.set(i);
      have = true;
    } else if (v == best_val) {
      best.set(i);
    }
  }
  return best;
}

long long fk_of(const std::vector<long long>& counts, int k) {
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[k];
}

}  // namespace

MinkowskiSum minkowski_sum(const std::vector<VPolytope>& summands) {
  if (summands.empty()) throw Error("minkowski_sum: need at least one summand");
  const int ambient = summands[0].ambient_dim;
  for (const VPolytope& p : summands) {
    if (p.ambient_dim != ambient) throw Error("minkowski_sum: ambient dimension mismatch");
  }
  MinkowskiSum ms;
  for (const VPolytope& p : summands) {
    HullData h = hull(p.vertices);
    h.poly.name = p.name;
    ms.summand_lattices.push_back(face_lattice(h));
    ms.summands.push_back(std::move(h));
  }
  std::vector<QVec> sums{QVec(ambient, Rat(0))};
  for (const HullData& h : ms.summands) {
    std::vector<QVec> next;
    next.reserve(sums.size() * h.poly.vertices.size());
    for (const QVec& s : sums) {
      for (const QVec& v : h.poly.vertices) next.push_back(vec_add(s, v));
    }
    sums = std::move(next);
  }
  ms.sum = hull(sums);
  ms.lattice = face_lattice(ms.sum);
  ms.d = ms.sum.dim;
  return ms;
}

NormalCone normal_cone(const HullData& h, const FaceLattice& l, int face_idx) {
  const Face& f = l.faces[face_idx];
  if (f.dim < 0) throw Error("normal_cone: empty face has no normal cone");
  NormalCone c;
  c.face_index = face_idx;
  for (const Facet& facet : h.facets) {
    if (f.verts.is_subset_of(facet.incident)) c.generators.push_back(facet.normal);
  }
  QMat gens(c.generators.begin(), c.generators.end());
  const int gen_rank = gens.empty() ? 0 : rank(gens);
  c.dim = gen_rank + static_cast<int>(h.hull_equations.size());
  if (h.dim == h.poly.ambient_dim && c.dim != h.dim - f.dim) {
    throw Error("normal_cone: cone dimension is not codim(face) (internal)");
  }
  return c;
}

QVec relint_witness(const NormalCone& c, const HullData& h, const FaceLattice& l) {
  QVec w(h.poly.ambient_dim, Rat(0));
  for (const QVec& g : c.generators) w = vec_add(w, g);
  if (argmax_set(h.poly.vertices, w) != l.faces[c.face_index].verts) {
    throw Error("relint_witness: witness does not expose its face (internal)");
  }
  return w;
}

SumDecomposition decompose_faces(const MinkowskiSum& ms) {
  return decompose_faces(ms, [](int, int) { return Rat(1); });
}

SumDecomposition decompose_faces(const MinkowskiSum& ms, const WitnessWeights& weights) {
  SumDecomposition sd;
  sd.ms = &ms;
  sd.by_face.resize(ms.lattice.faces.size());
  const int r = static_cast<int>(ms.summands.size());
  for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
    const Face& f = ms.lattice.faces[fi];
    if (f.dim < 0) continue;
    NormalCone cone = normal_cone(ms.sum, ms.lattice, static_cast<int>(fi));
    QVec w(ms.sum.poly.ambient_dim, Rat(0));
    for (std::size_t g = 0; g < cone.generators.size(); ++g) {
      const Rat mu = weights(static_cast<int>(fi), static_cast<int>(g));
      if (mu <= 0) throw Error("decompose_faces: witness weights must be positive");
      w = vec_add(w, vec_scale(mu, cone.generators[g]));
    }
    if (argmax_set(ms.sum.poly.vertices, w) != f.verts) {
      throw Error("decompose_faces: witness does not expose its face (internal)");
    }
    FaceDecomposition dec;
    int dim_sum = 0;
    for (int i = 0; i < r; ++i) {
      const VertexSet part = argmax_set(ms.summands[i].poly.vertices, w);
      const int idx = ms.summand_lattices[i].index_of(part);
      if (idx < 0) throw Error("decompose_faces: argmax set is not a summand face (internal)");
      dec.parts.push_back(idx);
      dim_sum += ms.summand_lattices[i].faces[idx].dim;
    }
    dec.exact = (f.dim == dim_sum);
    if (f.dim > dim_sum) throw Error("decompose_faces: dim(F) exceeds sum of part dims (internal)");
    sd.by_face[fi] = std::move(dec);
  }
  return sd;
}

bool is_relatively_general_position(const SumDecomposition& sd) {
  const MinkowskiSum& ms = *sd.ms;
  for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
    if (ms.lattice.faces[fi].dim == ms.d - 1 && !sd.by_face[fi].exact) return false;
  }
  return true;
}

DeltaVector delta_vector(int face_idx, const SumDecomposition& sd) {
  const MinkowskiSum& ms = *sd.ms;
  const Face& f = ms.lattice.faces[face_idx];
  if (f.dim < 0) throw Error("delta_vector: empty face");
  DeltaVector dv;
  dv.dim = f.dim;
  const std::vector<long long> counts = ms.lattice.subface_counts(face_idx);
  dv.entries.assign(f.dim + 1, Rat(0));
  for (int k = 0; k <= f.dim; ++k) dv.entries[k] = Rat(counts[k]);
  const FaceDecomposition& dec = sd.by_face[face_idx];
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const std::vector<long long> part = ms.summand_lattices[i].subface_counts(dec.parts[i]);
    if (part.size() > dv.entries.size()) {
      throw Error("delta_vector: part dimension exceeds face dimension (internal)");
    }
    for (std::size_t k = 0; k < part.size(); ++k) dv.entries[k] -= Rat(part[k]);
  }
  return dv;
}

namespace {

// Shared precondition handling: returns the number of low-dimensional
// summands and fills advisory notes.
void check_preconditions(const SumDecomposition& sd, bool require_full_dim,
                         VerifierReport& r) {
  const MinkowskiSum& ms = *sd.ms;
  if (require_full_dim) {
    for (std::size_t i = 0; i < ms.summands.size(); ++i) {
      if (ms.summands[i].dim != ms.d) {
        r.advisory = true;
        std::ostringstream os;
        os << "precondition violated: summand " << i << " has dim " << ms.summands[i].dim
           << " < " << ms.d;
        r.notes.push_back(os.str());
      }
    }
  }
  if (!is_relatively_general_position(sd)) {
    r.advisory = true;
    r.notes.push_back("precondition violated: summands not relatively in general position");
  }
}

Rat mainthm_lhs(const SumDecomposition& sd, const Rat& a) {
  const MinkowskiSum& ms = *sd.ms;
  const DeltaVector dv = delta_vector(ms.lattice.top_index(), sd);
  Rat lhs = 0;
  for (int k = 0; k <= std::min(dv.dim, ms.d - 1); ++k) {
    lhs += sign_pow(k) * (Rat(k) + a) * dv.entries[k];
  }
  return lhs;
}

std::string delta_display(const DeltaVector& dv) {
  std::ostringstream os;
  os << "f^delta = (";
  for (int k = 0; k <= dv.dim; ++k) {
    if (k) os << ", ";
    os << dv.entries[k];
  }
  os << ")";
  return os.str();
}

}  // namespace

VerifierReport verify_mainthm(const SumDecomposition& sd) {
  VerifierReport r;
  r.identity = "mainthm";
  check_preconditions(sd, /*require_full_dim=*/true, r);
  r.lhs = mainthm_lhs(sd, Rat(0));
  r.rhs = 0;
  r.pass = (r.lhs == r.rhs);
  r.diagnostics.push_back(delta_display(delta_vector(sd.ms->lattice.top_index(), sd)));
  return r;
}

VerifierReport verify_maincor(const SumDecomposition& sd, const Rat& a) {
  VerifierReport r;
  r.identity = "maincor";
  check_preconditions(sd, /*require_full_dim=*/true, r);
  const MinkowskiSum& ms = *sd.ms;
  const int rr = static_cast<int>(ms.summands.size());
  r.lhs = mainthm_lhs(sd, a);
  r.rhs = a * Rat(1 - rr) * (Rat(1) - Rat(sign_pow(ms.d)));
  r.pass = (r.lhs == r.rhs);
  r.notes.push_back("a = " + rat_to_string(a));
  return r;
}

VerifierReport verify_maincor2(const SumDecomposition& sd) {
  VerifierReport r;
  r.identity = "maincor2";
  check_preconditions(sd, /*require_full_dim=*/false, r);
  const MinkowskiSum& ms = *sd.ms;
  r.lhs = mainthm_lhs(sd, Rat(0));
  Rat low_dim_total = 0;
  for (const HullData& h : ms.summands) {
    if (h.dim < ms.d) low_dim_total += h.dim;
  }
  r.rhs = Rat(sign_pow(ms.d + 1)) * low_dim_total;
  r.pass = (r.lhs == r.rhs);
  return r;
}

VerifierReport verify_thm_delta(const SumDecomposition& sd, int k) {
  const MinkowskiSum& ms = *sd.ms;
  if (k < 0 || k >= ms.d) throw Error("thm_delta: need 0 <= k < d");
  VerifierReport r;
  r.identity = "thm_delta";
  Rat lhs = 0;
  for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
    const Face& f = ms.lattice.faces[fi];
    if (f.dim < 0) continue;
    Rat delta_k = 0;
    if (k <= f.dim) {
      const DeltaVector dv = delta_vector(static_cast<int>(fi), sd);
      delta_k = dv.entries[k];
    }
    lhs += Rat(sign_pow(ms.d - f.dim)) * delta_k;
  }
  int summands_of_dim_k = 0;
  for (const HullData& h : ms.summands) {
    if (h.dim == k) ++summands_of_dim_k;
  }
  r.lhs = lhs;
  r.rhs = Rat(-sign_pow(ms.d - k)) * Rat(summands_of_dim_k);
  r.pass = (r.lhs == r.rhs);
  std::ostringstream os;
  os << "k = " << k;
  r.notes.push_back(os.str());
  return r;
}

VerifierReport verify_lemface(const SumDecomposition& sd, int face_idx) {
  const MinkowskiSum& ms = *sd.ms;
  const Face& f = ms.lattice.faces[face_idx];
  if (f.dim < 0) throw Error("lemface: empty face");
  const FaceDecomposition& dec = sd.by_face[face_idx];
  if (!dec.exact) throw Error("lemface: face decomposition is not exact");
  VerifierReport r;
  r.identity = "lemface";

  FVector fv;
  fv.d = f.dim;
  fv.counts = ms.lattice.subface_counts(face_idx);
  const CharPoly p = char_poly(fv);
  CharPoly product{{BigInt(1)}};
  CharPoly part_sum;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    FVector pf;
    pf.d = ms.summand_lattices[i].faces[dec.parts[i]].dim;
    pf.counts = ms.summand_lattices[i].subface_counts(dec.parts[i]);
    const CharPoly pi = char_poly(pf);
    product = product * pi;
    part_sum = part_sum + pi;
  }
  const bool product_ok = (p == product);
  const CharPoly p_delta = p - part_sum;
  // sum_k (-1)^k k f^delta_k(F) == -(p_delta)'(-1)
  const Rat derivative_check = -p_delta.derivative().eval(Rat(-1));
  r.lhs = derivative_check;
  r.rhs = 0;
  r.pass = product_ok && (derivative_check == 0);
  r.diagnostics.push_back("p = " + p.display());
  r.diagnostics.push_back("prod p_i = " + product.display());
  r.diagnostics.push_back("p_delta = " + p_delta.display());
  if (!product_ok) r.notes.push_back("characteristic polynomial product check failed");
  return r;
}

VerifierReport verify_lem_euler(const FaceLattice& l, int k) {
  if (k < 0 || k >= l.d) throw Error("lem_euler: need 0 <= k < d");
  VerifierReport r;
  r.identity = "lem_euler";
  Rat lhs = 0;
  for (std::size_t fi = 0; fi < l.faces.size(); ++fi) {
    const Face& f = l.faces[fi];
    if (f.dim < 0 || f.dim < k) continue;
    const std::vector<long long> counts = l.subface_counts(static_cast<int>(fi));
    lhs += Rat(sign_pow(l.d - f.dim)) * Rat(fk_of(counts, k));
  }
  r.lhs = lhs;
  r.rhs = 0;
  r.pass = (lhs == 0);
  std::ostringstream os;
  os << "k = " << k;
  r.notes.push_back(os.str());
  return r;
}

VerifierReport verify_lem_summand(const SumDecomposition& sd, int i, int k) {
  const MinkowskiSum& ms = *sd.ms;
  const int rr = static_cast<int>(ms.summands.size());
  if (i < 0 || i >= rr) throw Error("lem_summand: summand index out of range");
  if (k < 0 || k >= ms.d) throw Error("lem_summand: need 0 <= k < d");
  VerifierReport r;
  r.identity = "lem_summand";
  Rat lhs = 0;
  for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
    const Face& f = ms.lattice.faces[fi];
    if (f.dim < 0) continue;
    const int part = sd.by_face[fi].parts[i];
    const std::vector<long long> counts = ms.summand_lattices[i].subface_counts(part);
    lhs += Rat(sign_pow(ms.d - f.dim)) * Rat(fk_of(counts, k));
  }
  const int dim_pi = ms.summands[i].dim;
  r.lhs = lhs;
  r.rhs = (k == dim_pi) ? Rat(sign_pow(ms.d - dim_pi)) : Rat(0);
  r.pass = (r.lhs == r.rhs);
  std::ostringstream os;
  os << "i = " << i << ", k = " << k << ", dim(P_i) = " << dim_pi;
  r.notes.push_back(os.str());
  return r;
}

QMat cayley_rotation(int d, std::uint64_t seed, int shrink_step) {
  SplitMix64 rng(seed);
  // Skew entries k / 2^(10+t), |k| <= 16, so every entry has magnitude
  // <= 2^(-6-t): the rotation angle shrinks by half per retry.
  const BigInt denom = BigInt(1) << (10 + shrink_step);
  QMat a(d, QVec(d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const long long num = rng.signed_below(16);
      a[i][j] = Rat(BigInt(num), denom);
      a[j][i] = -a[i][j];
    }
  }
  const QMat identity = identity_matrix(d);
  QMat i_minus_a(d, QVec(d));
  QMat i_plus_a(d, QVec(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      i_minus_a[i][j] = identity[i][j] - a[i][j];
      i_plus_a[i][j] = identity[i][j] + a[i][j];
    }
  }
  auto inv = inverse(i_minus_a);
  if (!inv) throw Error("cayley_rotation: I - A singular (impossible for skew A)");
  return mat_mul(*inv, i_plus_a);
}

PerturbResult perturb_to_general_position(const std::vector<VPolytope>& summands,
                                          std::uint64_t seed, int max_retries) {
  if (summands.size() < 2) throw Error("perturb: need at least two summands");
  const MinkowskiSum base = minkowski_sum(summands);
  const SumDecomposition base_sd = decompose_faces(base);
  PerturbResult result;
  result.seed = seed;
  if (is_relatively_general_position(base_sd)) {
    for (const HullData& h : base.summands) result.rotated.push_back(h.poly);
    result.identity = true;
    return result;
  }
  const FVector f_base = f_vector(base.lattice);
  std::vector<FVector> f_summands;
  for (const FaceLattice& l : base.summand_lattices) f_summands.push_back(f_vector(l));
  const int ambient = summands[0].ambient_dim;

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<VPolytope> rotated;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      SplitMix64 mix(seed);
      const std::uint64_t sub = mix.next() ^ (0x51ed270b * static_cast<std::uint64_t>(attempt + 1)) ^
                                (0xc2b2ae3d * static_cast<std::uint64_t>(i + 1));
      const QMat q = cayley_rotation(ambient, sub, attempt);
      VPolytope p;
      p.ambient_dim = ambient;
      p.name = summands[i].name;
      for (const QVec& v : base.summands[i].poly.vertices) p.vertices.push_back(mat_vec(q, v));
      rotated.push_back(std::move(p));
    }
    MinkowskiSum ms = minkowski_sum(rotated);
    SumDecomposition sd = decompose_faces(ms);
    if (!is_relatively_general_position(sd)) {
      last_failure = "attempt " + std::to_string(attempt) + ": not in general position";
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (f_vector(ms.summand_lattices[i]) != f_summands[i]) {
        // cannot happen for an exact rotation; treat as a failed attempt
        last_failure = "attempt " + std::to_string(attempt) + ": summand f-vector changed";
        ok = false;
        break;
      }
    }
    if (ok) {
      const FVector f_new = f_vector(ms.lattice);
      for (int k = 0; k <= f_base.d; ++k) {
        const long long before = f_base.counts[k];
        const long long after = (k <= f_new.d) ? f_new.counts[k] : 0;
        if (after < before) {
          last_failure = "attempt " + std::to_string(attempt) + ": f_" + std::to_string(k) +
                         " dropped from " + std::to_string(before) + " to " + std::to_string(after);
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      result.rotated = std::move(rotated);
      result.retries_used = attempt;
      return result;
    }
  }
  throw Error("perturb: general position not reached within " + std::to_string(max_retries) +
              " retries (" + last_failure + ")");
}

}  // namespace polysum
