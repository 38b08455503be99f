#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "polysum/io.hpp"
#include "support/fixtures.hpp"

using namespace polysum;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYSUM_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  RunResult r;
  r.out = out;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "polysum_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string stage(const VPolytope& p, const std::string& filename) {
  const fs::path path = workdir() / filename;
  save_polytope(path.string(), p);
  return path.string();
}

}  // namespace

TEST_CASE("fvector on the cube") {
  const std::string cube = stage(fixtures::cube(), "cube.json");
  const RunResult r = run_cli("fvector " + cube);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("f = (8, 12, 6); euler: pass") != std::string::npos);
  CHECK(r.out.find("f_{0,2} = 24") != std::string::npos);
}

TEST_CASE("fvector on a point") {
  const std::string pt = stage(fixtures::point_3d(), "point.json");
  const RunResult r = run_cli("fvector " + pt);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("f = (1)") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  const fs::path bad = workdir() / "bad.json";
  write_text_file(bad.string(), "{ not json");
  const RunResult r = run_cli("fvector " + bad.string());
  CHECK(r.exit_code == 2);
  const RunResult missing = run_cli("fvector /nonexistent/nope.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("sum of square and diamond reports general position") {
  const std::string a = stage(fixtures::square(), "square.json");
  const std::string b = stage(fixtures::diamond(), "diamond.json");
  const RunResult r = run_cli("sum " + a + " " + b + " --check-gp");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("f = (8, 8)") != std::string::npos);
  CHECK(r.out.find("gp: true") != std::string::npos);
}

TEST_CASE("sum of cube and cube is degenerate") {
  const std::string a = stage(fixtures::cube(), "cube.json");
  const RunResult r = run_cli("sum " + a + " " + a + " --check-gp");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("gp: false") != std::string::npos);
}

TEST_CASE("sum with mismatched dimensions exits 2") {
  const std::string a = stage(fixtures::square(), "square.json");
  const std::string b = stage(fixtures::cube(), "cube.json");
  const RunResult r = run_cli("sum " + a + " " + b);
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify maincor2 on the hexagon example") {
  const std::string a = stage(fixtures::square(), "square.json");
  const std::string b = stage(fixtures::segment_diag(), "dseg.json");
  const RunResult r = run_cli("verify maincor2 " + a + " " + b);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"lhs\": \"-1\"") != std::string::npos);
  CHECK(r.out.find("\"rhs\": \"-1\"") != std::string::npos);
}

TEST_CASE("verify mainthm on the degenerate pair exits 1") {
  const std::string a = stage(fixtures::square(), "square.json");
  const std::string b = stage(fixtures::segment_h(), "hseg.json");
  const RunResult r = run_cli("verify mainthm " + a + " " + b);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"advisory\": true") != std::string::npos);
}

TEST_CASE("verify mainthm on random perturbed instances") {
  const RunResult r = run_cli("verify mainthm --random --d 2 --r 2 --count 3 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical across runs") {
  const std::string args = "verify mainthm --random --d 3 --r 2 --count 2 --seed 11 --json";
  const RunResult r1 = run_cli(args);
  const RunResult r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
}

TEST_CASE("verify bb accepts poset input") {
  const fs::path poset = workdir() / "poset.json";
  write_text_file(poset.string(),
                  R"({"ranks":[0,1,1,2],"covers":[[0,1],[0,2],[1,3],[2,3]]})");
  const RunResult r = run_cli("verify bb --poset " + poset.string());
  CHECK(r.exit_code == 0);
}

TEST_CASE("dual writes the polar dual") {
  const std::string cube = stage(fixtures::cube(), "cube.json");
  const fs::path out = workdir() / "cube_dual.json";
  const RunResult r = run_cli("dual " + cube + " --out " + out.string());
  CHECK(r.exit_code == 0);
  const VPolytope dual = load_polytope(out.string());
  CHECK(dual.vertices.size() == 6);
  // origin not interior: exit 2
  const std::string off = stage(fixtures::rectangle_off(), "rect_off.json");
  CHECK(run_cli("dual " + off).exit_code == 2);
}

TEST_CASE("pc-check distinguishes centered from off-center") {
  const std::string cube = stage(fixtures::cube(), "cube.json");
  CHECK(run_cli("pc-check " + cube).exit_code == 0);
  const std::string off = stage(fixtures::rectangle_off(), "rect_off.json");
  const RunResult r = run_cli("pc-check " + off);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("no") != std::string::npos);
}

TEST_CASE("perturb cube + cube achieves general position") {
  const std::string cube = stage(fixtures::cube(), "cube.json");
  const std::string prefix = (workdir() / "pert").string();
  const RunResult r =
      run_cli("perturb " + cube + " " + cube + " --seed 1 --out-prefix " + prefix);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("componentwise f' >= f: pass") != std::string::npos);
  const VPolytope rot = load_polytope(prefix + "_0.json");
  CHECK(rot.vertices.size() == 8);
}

TEST_CASE("rand generates a deterministic polytope") {
  const fs::path out1 = workdir() / "r1.json";
  const fs::path out2 = workdir() / "r2.json";
  CHECK(run_cli("rand --d 2 --vertices 8 --seed 42 --out " + out1.string()).exit_code == 0);
  CHECK(run_cli("rand --d 2 --vertices 8 --seed 42 --out " + out2.string()).exit_code == 0);
  CHECK(read_text_file(out1.string()) == read_text_file(out2.string()));
  const VPolytope p = load_polytope(out1.string());
  CHECK(p.vertices.size() >= 3);
  CHECK(p.vertices.size() <= 8);
}
