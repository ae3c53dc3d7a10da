// Black-box test of the command-line tool: spawns the real binary and checks
// stdout text and exit codes.  argv[1] is the binary, argv[2] the samples
// directory.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_bin;
std::string g_samples;

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cmd(const std::string& full_cmd) {
  RunResult r;
  FILE* p = popen(full_cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

RunResult run(const std::string& args) { return run_cmd(g_bin + " " + args + " 2>/dev/null"); }

std::string sample(const std::string& name) { return g_samples + "/" + name; }

std::filesystem::path tmp_dir() {
  auto p = std::filesystem::temp_directory_path() / "acsigma_cli_test";
  std::filesystem::create_directories(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("vf against the x-axis matches the worked example") {
  RunResult r = run("vf " + sample("hook.json") + " S --line 0 1 0");
  CHECK(r.code == 0);
  CHECK(r.out == "vf=4; crossing=[0,2,4,7]\n");
}

TEST_CASE("vf without a line maximizes over all lines") {
  RunResult r = run("vf " + sample("hook.json") + " S");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 9) == "vf_max=5;");
  CHECK(r.out.find("labels=[") != std::string::npos);
}

TEST_CASE("var reports the collinear-spike bound exactly") {
  RunResult r = run("var " + sample("spike.json") + " f");
  CHECK(r.code == 0);
  CHECK(r.out.find("var_lb=2; norm_lb=3;") == 0);
  CHECK(r.out.find("exhaustive=yes") != std::string::npos);
}

TEST_CASE("reduce: triangle gives an empty chain") {
  auto chain = tmp_dir() / "tri_chain.json";
  RunResult r = run("reduce " + sample("triangle.json") + " T --out " + chain.string());
  CHECK(r.code == 0);
  CHECK(r.out == "steps=0\n");
  CHECK(slurp(chain).find("\"steps\": []") != std::string::npos);
}

TEST_CASE("reduce: hexagon takes three steps and writes deterministic frames") {
  auto chain = tmp_dir() / "hex_chain.json";
  auto frames = tmp_dir() / "hex_frames";
  std::filesystem::remove_all(frames);
  std::string cmd =
      "reduce " + sample("hexagon.json") + " P --out " + chain.string() + " --svg " +
      frames.string();
  RunResult r = run(cmd);
  CHECK(r.code == 0);
  CHECK(r.out == "steps=3\n");
  std::string first = slurp(frames / "frame_0002.svg");
  CHECK(first.find("<svg") != std::string::npos);
  CHECK(run(cmd).code == 0);  // rerun over the same inputs
  CHECK(slurp(frames / "frame_0002.svg") == first);
}

TEST_CASE("apply: forward then inverse restores the scene byte for byte") {
  auto dir = tmp_dir();
  auto id_chain = dir / "id_chain.json";
  std::ofstream(id_chain) << "{\"steps\": []}\n";
  auto chain = dir / "rt_chain.json";
  auto canon = dir / "canon.json";
  auto fwd = dir / "fwd.json";
  auto back = dir / "back.json";

  CHECK(run("reduce " + sample("hexagon.json") + " P --out " + chain.string()).code == 0);
  CHECK(run("apply " + id_chain.string() + " " + sample("hexagon.json") + " --out " +
            canon.string())
            .code == 0);
  CHECK(run("apply " + chain.string() + " " + sample("hexagon.json") + " --out " + fwd.string())
            .code == 0);
  CHECK(run("apply " + chain.string() + " " + fwd.string() + " --inverse --out " + back.string())
            .code == 0);
  CHECK(slurp(back) == slurp(canon));
  CHECK(slurp(fwd) != slurp(canon));

  SUBCASE("omitting --out prints the scene") {
    RunResult r = run("apply " + id_chain.string() + " " + sample("hexagon.json"));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(canon));
  }
}

TEST_CASE("normalize reports steps and genus") {
  auto chain = tmp_dir() / "g1_chain.json";
  RunResult r = run("normalize " + sample("genus1.json") + " R --out " + chain.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("steps=") == 0);
  CHECK(r.out.find("; genus=1\n") != std::string::npos);
  CHECK(slurp(chain).find("\"kind\"") != std::string::npos);
}

TEST_CASE("experiment subcommand") {
  RunResult r = run("experiment norm-examples");
  CHECK(r.code == 0);
  CHECK(r.out.find("ridge_norm=2") != std::string::npos);

  // environment seed wins over the flag
  RunResult s = run_cmd("ACSIGMA_SEED=55 " + g_bin +
                        " experiment fuzz-hpa --trials 40 --seed 999 2>/dev/null");
  CHECK(s.code == 0);
  CHECK(s.out.find("seed=55") != std::string::npos);
  CHECK(s.out.find("violations=0") != std::string::npos);
}

TEST_CASE("failures exit with code 1 and a message") {
  RunResult missing = run_cmd(g_bin + " vf /nonexistent.json S 2>&1");
  CHECK(missing.code == 1);
  CHECK(missing.out.find("error:") != std::string::npos);

  RunResult unknown = run_cmd(g_bin + " vf " + sample("hook.json") + " nope 2>&1");
  CHECK(unknown.code == 1);
  CHECK(unknown.out.find("nope") != std::string::npos);

  CHECK(run("reduce " + sample("hook.json") + " S --out /tmp/x.json").code == 1);
  CHECK(run_cmd(g_bin + " 2>/dev/null").code != 0);  // subcommand required
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <acsigma-binary> <samples-dir> [doctest flags]\n", argv[0]);
    return 1;
  }
  g_bin = argv[1];
  g_samples = argv[2];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
