// polysum: exact Minkowski-sum computations and identity verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polysum/centered.hpp"
#include "polysum/flags.hpp"
#include "polysum/io.hpp"
#include "polysum/minkowski.hpp"
#include "polysum/polytope.hpp"
#include "polysum/random.hpp"
#include "polysum/report.hpp"

using namespace polysum;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // an identity check failed
constexpr int kExitError = 2;  // input or configuration problem

json report_json(const VerifierReport& r) { return json::parse(report_to_json_string(r)); }

json fvector_json(const FVector& f) {
  json counts = json::array();
  for (int k = 0; k < f.d; ++k) counts.push_back(f.counts[k]);
  if (f.d == 0) counts.push_back(f.counts[0]);
  return counts;
}

int max_perturb_retries() {
  if (const char* env = std::getenv("POLYSUM_MAX_RETRIES")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

struct SumInstance {
  std::string label;
  std::vector<VPolytope> summands;
  std::optional<std::uint64_t> rotation_seed;
  int rotation_retries = 0;
};

// Deterministic random sums for batch verification. mixed_dims draws one
// summand of lower dimension, which is what maincor2 is about.
std::vector<SumInstance> random_sum_instances(int count, int d, int r, int max_vertices,
                                              std::uint64_t seed, bool mixed_dims) {
  std::vector<SumInstance> out;
  for (int i = 0; i < count; ++i) {
    SplitMix64 mix(seed + 0x9e3779b97f4a7c15ull * (i + 1));
    SumInstance inst;
    inst.label = "random#" + std::to_string(i);
    for (int j = 0; j < r; ++j) {
      const int n = d + 1 + static_cast<int>(mix.below(std::max(1, max_vertices - d)));
      const std::uint64_t s = mix.next();
      if (mixed_dims && j == r - 1) {
        const int dim = 1 + static_cast<int>(mix.below(std::max(1, d - 1)));
        inst.summands.push_back(rand_lowdim_polytope(d, dim, std::max(n, dim + 1), s).poly);
      } else {
        inst.summands.push_back(rand_polytope(d, n, s).poly);
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

void perturb_instance(SumInstance& inst, std::uint64_t seed) {
  PerturbResult pr = perturb_to_general_position(inst.summands, seed, max_perturb_retries());
  inst.summands = pr.rotated;
  inst.rotation_seed = pr.seed;
  inst.rotation_retries = pr.retries_used;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string identity;
  std::vector<std::string> files;
  bool random = false;
  bool poset_inputs = false;
  int d = 3;
  int r = 2;
  int count = 10;
  int max_vertices = 8;
  std::uint64_t seed = 1;
  Rat a = Rat(1);
  std::string out_path;
  bool json_output = false;
};

bool identity_needs_sum(const std::string& id) {
  return id == "mainthm" || id == "maincor" || id == "maincor2" || id == "delta" ||
         id == "lemface" || id == "summand";
}

bool identity_needs_general_position(const std::string& id) {
  return id == "mainthm" || id == "maincor" || id == "maincor2";
}

std::vector<VerifierReport> run_identity_on_sum(const VerifyOptions& opt, const SumInstance& inst) {
  const MinkowskiSum ms = minkowski_sum(inst.summands);
  const SumDecomposition sd = decompose_faces(ms);
  std::vector<VerifierReport> reports;
  if (opt.identity == "mainthm") {
    reports.push_back(verify_mainthm(sd));
  } else if (opt.identity == "maincor") {
    reports.push_back(verify_maincor(sd, opt.a));
  } else if (opt.identity == "maincor2") {
    reports.push_back(verify_maincor2(sd));
  } else if (opt.identity == "delta") {
    for (int k = 0; k < ms.d; ++k) reports.push_back(verify_thm_delta(sd, k));
  } else if (opt.identity == "summand") {
    for (std::size_t i = 0; i < ms.summands.size(); ++i) {
      for (int k = 0; k < ms.d; ++k) {
        reports.push_back(verify_lem_summand(sd, static_cast<int>(i), k));
      }
    }
  } else if (opt.identity == "lemface") {
    int exact_faces = 0;
    for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
      if (ms.lattice.faces[fi].dim < 0 || !sd.by_face[fi].exact) continue;
      ++exact_faces;
      VerifierReport r = verify_lemface(sd, static_cast<int>(fi));
      if (!r.pass) reports.push_back(r);
    }
    VerifierReport summary;
    summary.identity = "lemface";
    summary.lhs = Rat(static_cast<long long>(reports.size()));
    summary.rhs = 0;
    summary.pass = reports.empty();
    summary.notes.push_back(std::to_string(exact_faces) + " exact faces checked");
    reports.push_back(summary);
  }
  return reports;
}

std::vector<VerifierReport> run_identity_on_polytope(const VerifyOptions& opt, const VPolytope& p) {
  std::vector<VerifierReport> reports;
  const HullData h = hull(p.vertices);
  const FaceLattice l = face_lattice(h);
  if (opt.identity == "euler") {
    reports.push_back(euler_check(f_vector(l)));
    for (int k = 0; k < l.d; ++k) reports.push_back(verify_lem_euler(l, k));
  } else if (opt.identity == "pc") {
    reports.push_back(is_perfectly_centered(h, l));
  } else if (opt.identity == "fvthm") {
    reports.push_back(verify_fvthm(h, l));
  } else {
    const FlagVector fv = flag_vector(from_face_lattice(l));
    if (opt.identity == "bb") {
      reports.push_back(verify_bayer_billera(fv));
    } else if (opt.identity == "dsrshort") {
      for (int i = -1; i <= fv.d; ++i) {
        for (int k = i + 1; k <= fv.d; ++k) reports.push_back(verify_dsrshort(fv, i, k));
      }
    } else if (opt.identity == "nestthm") {
      reports.push_back(verify_nestthm(fv));
    }
  }
  return reports;
}

std::vector<VerifierReport> run_identity_on_poset(const VerifyOptions& opt, const GradedPoset& p) {
  std::vector<VerifierReport> reports;
  if (!is_eulerian(p)) {
    VerifierReport r;
    r.identity = opt.identity;
    r.pass = false;
    r.lhs = 1;
    r.rhs = 0;
    r.notes.push_back("input poset is not Eulerian");
    reports.push_back(r);
    return reports;
  }
  const FlagVector fv = flag_vector(p);
  if (opt.identity == "bb") {
    reports.push_back(verify_bayer_billera(fv));
  } else if (opt.identity == "dsrshort") {
    for (int i = -1; i <= fv.d; ++i) {
      for (int k = i + 1; k <= fv.d; ++k) reports.push_back(verify_dsrshort(fv, i, k));
    }
  } else if (opt.identity == "nestthm") {
    reports.push_back(verify_nestthm(fv));
  } else {
    throw Error("identity '" + opt.identity + "' does not accept poset inputs");
  }
  return reports;
}

int cmd_verify(const VerifyOptions& opt) {
  json out;
  out["command"] = "verify";
  out["identity"] = opt.identity;
  json instances = json::array();
  bool all_pass = true;

  auto add_instance = [&](const std::string& label, const std::vector<VerifierReport>& reports,
                          const SumInstance* inst) {
    json ji;
    ji["index"] = instances.size();
    ji["label"] = label;
    json rs = json::array();
    for (const VerifierReport& r : reports) {
      rs.push_back(report_json(r));
      if (!r.pass) all_pass = false;
    }
    ji["reports"] = std::move(rs);
    if (inst && inst->rotation_seed) {
      ji["rotation"] = {{"seed", *inst->rotation_seed}, {"retries", inst->rotation_retries}};
    }
    instances.push_back(std::move(ji));
  };

  if (identity_needs_sum(opt.identity)) {
    std::vector<SumInstance> insts;
    if (opt.random) {
      out["seed"] = opt.seed;
      out["count"] = opt.count;
      insts = random_sum_instances(opt.count, opt.d, opt.r, opt.max_vertices, opt.seed,
                                   opt.identity == "maincor2");
      if (identity_needs_general_position(opt.identity)) {
        for (std::size_t i = 0; i < insts.size(); ++i) {
          perturb_instance(insts[i], opt.seed + 7919 * (i + 1));
        }
      }
    } else {
      if (opt.files.size() < 2) throw Error("identity '" + opt.identity + "' needs >= 2 polytope files");
      SumInstance inst;
      inst.label = "files";
      for (const std::string& f : opt.files) inst.summands.push_back(load_polytope(f));
      insts.push_back(std::move(inst));
    }
    for (const SumInstance& inst : insts) {
      add_instance(inst.label, run_identity_on_sum(opt, inst), &inst);
    }
  } else if (opt.poset_inputs) {
    for (const std::string& f : opt.files) {
      add_instance(f, run_identity_on_poset(opt, load_poset(f)), nullptr);
    }
  } else {
    std::vector<std::pair<std::string, VPolytope>> polys;
    if (opt.random) {
      out["seed"] = opt.seed;
      out["count"] = opt.count;
      for (int i = 0; i < opt.count; ++i) {
        SplitMix64 mix(opt.seed + 0x517cc1b727220a95ull * (i + 1));
        const int n = opt.d + 1 + static_cast<int>(mix.below(std::max(1, opt.max_vertices - opt.d)));
        HullData h = rand_polytope(opt.d, n, mix.next());
        polys.emplace_back("random#" + std::to_string(i), h.poly);
      }
    } else {
      if (opt.files.empty()) throw Error("identity '" + opt.identity + "' needs input files");
      for (const std::string& f : opt.files) polys.emplace_back(f, load_polytope(f));
    }
    for (const auto& [label, p] : polys) {
      add_instance(label, run_identity_on_polytope(opt, p), nullptr);
    }
  }

  out["instances"] = std::move(instances);
  out["all_pass"] = all_pass;
  const std::string text = out.dump(1) + "\n";
  if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
  if (opt.json_output || opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::cout << "verify " << opt.identity << ": " << (all_pass ? "all pass" : "FAILURES") << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Minkowski sums, face decompositions and f-vector identities"};
  app.require_subcommand(1);

  // ---- fvector ----
  std::string fv_path;
  bool fv_json = false;
  auto* fvector_cmd = app.add_subcommand("fvector", "f-vector, flag vector and Euler check");
  fvector_cmd->add_option("file", fv_path, "polytope JSON")->required();
  fvector_cmd->add_flag("--json", fv_json, "JSON output");

  // ---- sum ----
  std::vector<std::string> sum_paths;
  std::string sum_out;
  bool sum_decompose = false, sum_check_gp = false, sum_json = false;
  auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum of polytopes");
  sum_cmd->add_option("files", sum_paths, "polytope JSON files")->required()->expected(-1);
  sum_cmd->add_option("--out", sum_out, "write sum polytope JSON here");
  sum_cmd->add_flag("--decompose", sum_decompose, "print the face decomposition table");
  sum_cmd->add_flag("--check-gp", sum_check_gp, "print the relative-general-position verdict");
  sum_cmd->add_flag("--json", sum_json, "JSON output");

  // ---- perturb ----
  std::vector<std::string> pert_paths;
  std::string pert_out_prefix = "perturbed";
  std::uint64_t pert_seed = 1;
  auto* pert_cmd = app.add_subcommand("perturb", "rotate summands into relative general position");
  pert_cmd->add_option("files", pert_paths, "polytope JSON files")->required()->expected(-1);
  pert_cmd->add_option("--seed", pert_seed, "rotation seed");
  pert_cmd->add_option("--out-prefix", pert_out_prefix, "output file prefix");

  // ---- verify ----
  VerifyOptions vopt;
  std::string a_text = "1";
  auto* verify_cmd = app.add_subcommand("verify", "verify an identity on instances");
  verify_cmd
      ->add_option("identity", vopt.identity, "one of mainthm|maincor|maincor2|delta|lemface|euler|summand|bb|dsrshort|nestthm|fvthm|pc")
      ->required()
      ->check(CLI::IsMember({"mainthm", "maincor", "maincor2", "delta", "lemface", "euler",
                             "summand", "bb", "dsrshort", "nestthm", "fvthm", "pc"}));
  verify_cmd->add_option("files", vopt.files, "input files (polytope JSON, or poset JSON with --poset)");
  verify_cmd->add_flag("--random", vopt.random, "generate random instances instead of reading files");
  verify_cmd->add_flag("--poset", vopt.poset_inputs, "treat inputs as poset JSON");
  verify_cmd->add_option("--d", vopt.d, "dimension for random instances")->check(CLI::Range(1, 4));
  verify_cmd->add_option("--r", vopt.r, "summands per random sum")->check(CLI::Range(1, 4));
  verify_cmd->add_option("--count", vopt.count, "number of random instances")->check(CLI::Range(1, 10000));
  verify_cmd->add_option("--vertices", vopt.max_vertices, "max sample points per random polytope")
      ->check(CLI::Range(2, 50));
  verify_cmd->add_option("--seed", vopt.seed, "random seed");
  verify_cmd->add_option("--a", a_text, "parameter a for maincor (rational, e.g. 7/2)");
  verify_cmd->add_option("--out", vopt.out_path, "write the JSON report here");
  verify_cmd->add_flag("--json", vopt.json_output, "print the JSON report");

  // ---- dual ----
  std::string dual_path, dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "polar dual (origin must be interior)");
  dual_cmd->add_option("file", dual_path, "polytope JSON")->required();
  dual_cmd->add_option("--out", dual_out, "write dual polytope JSON here");

  // ---- pc-check ----
  std::string pc_path;
  bool pc_json = false;
  auto* pc_cmd = app.add_subcommand("pc-check", "perfectly-centered test");
  pc_cmd->add_option("file", pc_path, "polytope JSON")->required();
  pc_cmd->add_flag("--json", pc_json, "JSON output");

  // ---- rand ----
  int rand_d = 3, rand_n = 8;
  std::uint64_t rand_seed = 1;
  std::string rand_out;
  auto* rand_cmd = app.add_subcommand("rand", "seeded random polytope");
  rand_cmd->add_option("--d", rand_d, "dimension")->check(CLI::Range(1, 4));
  rand_cmd->add_option("--vertices", rand_n, "number of sample points")->check(CLI::Range(2, 200));
  rand_cmd->add_option("--seed", rand_seed, "seed");
  rand_cmd->add_option("--out", rand_out, "write polytope JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (fvector_cmd->parsed()) {
      const VPolytope p = load_polytope(fv_path);
      const HullData h = hull(p.vertices);
      const FaceLattice l = face_lattice(h);
      const FVector f = f_vector(l);
      const VerifierReport euler = euler_check(f);
      const FlagVector fv = flag_vector(from_face_lattice(l));
      if (fv_json) {
        json j;
        j["f_vector"] = fvector_json(f);
        j["euler"] = report_json(euler);
        j["flag_vector"] = json::parse(flag_vector_to_json(fv));
        std::cout << j.dump(1) << "\n";
      } else {
        std::cout << "f = " << f.display() << "; euler: " << (euler.pass ? "pass" : "FAIL") << "\n";
        for (const auto& [mask, count] : fv.counts) {
          std::vector<int> dims;
          for (int t = 0; t < fv.d; ++t) {
            if (mask & (1u << t)) dims.push_back(t);
          }
          if (dims.empty() || dims.size() > 3) continue;
          std::cout << "f_{";
          for (std::size_t i = 0; i < dims.size(); ++i) std::cout << (i ? "," : "") << dims[i];
          std::cout << "} = " << count << "\n";
        }
      }
      return euler.pass ? kExitPass : kExitFail;
    }

    if (sum_cmd->parsed()) {
      std::vector<VPolytope> summands;
      for (const std::string& f : sum_paths) summands.push_back(load_polytope(f));
      const MinkowskiSum ms = minkowski_sum(summands);
      VPolytope sum_poly = ms.sum.poly;
      sum_poly.name = "sum";
      const FVector f = f_vector(ms.lattice);
      json j;
      j["f_vector"] = fvector_json(f);
      j["dim"] = ms.d;
      std::optional<bool> gp;
      if (sum_decompose || sum_check_gp) {
        const SumDecomposition sd = decompose_faces(ms);
        gp = is_relatively_general_position(sd);
        if (sum_decompose) {
          json table = json::array();
          for (std::size_t fi = 0; fi < ms.lattice.faces.size(); ++fi) {
            const Face& face = ms.lattice.faces[fi];
            if (face.dim < 0) continue;
            json row;
            row["dim"] = face.dim;
            json parts = json::array();
            for (std::size_t i = 0; i < sd.by_face[fi].parts.size(); ++i) {
              parts.push_back(ms.summand_lattices[i].faces[sd.by_face[fi].parts[i]].dim);
            }
            row["part_dims"] = std::move(parts);
            row["exact"] = sd.by_face[fi].exact;
            table.push_back(std::move(row));
          }
          j["decomposition"] = std::move(table);
        }
      }
      if (gp) j["general_position"] = *gp;
      if (!sum_out.empty()) save_polytope(sum_out, sum_poly);
      if (sum_json) {
        std::cout << j.dump(1) << "\n";
      } else {
        std::cout << "sum: dim " << ms.d << ", f = " << f.display();
        if (gp) std::cout << ", gp: " << (*gp ? "true" : "false");
        std::cout << "\n";
      }
      return kExitPass;
    }

    if (pert_cmd->parsed()) {
      std::vector<VPolytope> summands;
      for (const std::string& f : pert_paths) summands.push_back(load_polytope(f));
      const MinkowskiSum before = minkowski_sum(summands);
      const FVector f_before = f_vector(before.lattice);
      PerturbResult pr;
      try {
        pr = perturb_to_general_position(summands, pert_seed, max_perturb_retries());
      } catch (const Error& e) {
        std::cerr << "perturb failed: " << e.what() << "\n";
        return kExitFail;
      }
      const MinkowskiSum after = minkowski_sum(pr.rotated);
      const FVector f_after = f_vector(after.lattice);
      std::cout << "before: f = " << f_before.display() << "\n";
      std::cout << "after:  f = " << f_after.display()
                << (pr.identity ? "  (identity rotation: already in general position)" : "") << "\n";
      bool monotone = true;
      for (int k = 0; k <= f_before.d; ++k) {
        const long long a = k <= f_after.d ? f_after.counts[k] : 0;
        if (a < f_before.counts[k]) monotone = false;
      }
      std::cout << "componentwise f' >= f: " << (monotone ? "pass" : "FAIL") << "\n";
      for (std::size_t i = 0; i < pr.rotated.size(); ++i) {
        const std::string path = pert_out_prefix + "_" + std::to_string(i) + ".json";
        save_polytope(path, pr.rotated[i]);
        std::cout << "wrote " << path << "\n";
      }
      return monotone ? kExitPass : kExitFail;
    }

    if (verify_cmd->parsed()) {
      vopt.a = parse_rat(a_text);
      return cmd_verify(vopt);
    }

    if (dual_cmd->parsed()) {
      const VPolytope p = load_polytope(dual_path);
      const HullData h = hull(p.vertices);
      const HullData dual = polar_dual(h);
      if (!dual_out.empty()) {
        save_polytope(dual_out, dual.poly);
      } else {
        std::cout << polytope_to_json(dual.poly) << "\n";
      }
      return kExitPass;
    }

    if (pc_cmd->parsed()) {
      const VPolytope p = load_polytope(pc_path);
      const HullData h = hull(p.vertices);
      const FaceLattice l = face_lattice(h);
      const VerifierReport r = is_perfectly_centered(h, l);
      if (pc_json) {
        std::cout << report_to_json_string(r, 1) << "\n";
      } else {
        std::cout << "perfectly centered: " << (r.pass ? "yes" : "no") << "\n";
        for (const std::string& d : r.diagnostics) std::cout << "  " << d << "\n";
      }
      return r.pass ? kExitPass : kExitFail;
    }

    if (rand_cmd->parsed()) {
      const HullData h = rand_polytope(rand_d, rand_n, rand_seed);
      if (!rand_out.empty()) {
        save_polytope(rand_out, h.poly);
      } else {
        std::cout << polytope_to_json(h.poly) << "\n";
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
