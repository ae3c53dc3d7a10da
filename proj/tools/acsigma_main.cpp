// Command-line front end.  All geometry lives behind the shared-library C
// interface; this file only moves strings and files around.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "acsigma.h"

namespace {

struct SceneHandle {
  acs_scene* p = nullptr;
  ~SceneHandle() { acs_scene_free(p); }
};

struct ChainHandle {
  acs_chain* p = nullptr;
  ~ChainHandle() { acs_chain_free(p); }
};

struct OwnedStr {
  char* p = nullptr;
  ~OwnedStr() { acs_string_free(p); }
};

// 0 on success, 1 on any error, 2 when a fuzz campaign found a counterexample
// (the reproducer from the library goes to stdout so it lands in logs).
int finish(acs_status rc) {
  if (rc == ACS_OK) return 0;
  if (rc == ACS_ERR_VIOLATION) {
    std::printf("violation: %s\n", acs_last_error());
    return 2;
  }
  std::fprintf(stderr, "error: %s\n", acs_last_error());
  return 1;
}

int cmd_vf(const std::string& scene_path, const std::string& list_id,
           const std::vector<std::string>& line) {
  SceneHandle s;
  acs_status rc = acs_scene_load(scene_path.c_str(), &s.p);
  if (rc != ACS_OK) return finish(rc);
  OwnedStr out;
  rc = line.empty() ? acs_cmd_vf_max(s.p, list_id.c_str(), &out.p)
                    : acs_cmd_vf_line(s.p, list_id.c_str(), line[0].c_str(), line[1].c_str(),
                                      line[2].c_str(), &out.p);
  if (rc != ACS_OK) return finish(rc);
  std::printf("%s\n", out.p);
  return 0;
}

int cmd_var(const std::string& scene_path, const std::string& fn_id, int max_len) {
  SceneHandle s;
  acs_status rc = acs_scene_load(scene_path.c_str(), &s.p);
  if (rc != ACS_OK) return finish(rc);
  OwnedStr out;
  rc = acs_cmd_var(s.p, fn_id.c_str(), max_len, &out.p);
  if (rc != ACS_OK) return finish(rc);
  std::printf("%s\n", out.p);
  return 0;
}

int cmd_transform(bool genus, const std::string& scene_path, const std::string& id,
                  const std::string& out_path, const std::string& svg_dir) {
  SceneHandle s;
  acs_status rc = acs_scene_load(scene_path.c_str(), &s.p);
  if (rc != ACS_OK) return finish(rc);
  ChainHandle chain;
  OwnedStr out;
  const char* svg = svg_dir.empty() ? nullptr : svg_dir.c_str();
  rc = genus ? acs_cmd_normalize(s.p, id.c_str(), svg, &chain.p, &out.p)
             : acs_cmd_reduce(s.p, id.c_str(), svg, &chain.p, &out.p);
  if (rc != ACS_OK) return finish(rc);
  rc = acs_chain_save(chain.p, out_path.c_str());
  if (rc != ACS_OK) return finish(rc);
  std::printf("%s\n", out.p);
  return 0;
}

int cmd_apply(const std::string& chain_path, const std::string& scene_path, bool inverse,
              const std::string& out_path) {
  ChainHandle chain;
  acs_status rc = acs_chain_load(chain_path.c_str(), &chain.p);
  if (rc != ACS_OK) return finish(rc);
  SceneHandle s;
  rc = acs_scene_load(scene_path.c_str(), &s.p);
  if (rc != ACS_OK) return finish(rc);
  SceneHandle mapped;
  rc = acs_cmd_apply(chain.p, s.p, inverse ? 1 : 0, &mapped.p);
  if (rc != ACS_OK) return finish(rc);
  if (!out_path.empty()) {
    rc = acs_scene_save(mapped.p, out_path.c_str());
    return finish(rc);
  }
  OwnedStr text;
  rc = acs_scene_serialize(mapped.p, &text.p);
  if (rc != ACS_OK) return finish(rc);
  std::fputs(text.p, stdout);
  return 0;
}

int cmd_experiment(const std::string& name, long n, long trials, unsigned long long seed,
                   const std::string& svg_dir) {
  if (const char* env = std::getenv("ACSIGMA_SEED")) seed = std::strtoull(env, nullptr, 10);
  OwnedStr out;
  acs_status rc = acs_cmd_experiment(name.c_str(), n, trials, seed,
                                     svg_dir.empty() ? nullptr : svg_dir.c_str(), &out.p);
  if (rc != ACS_OK) return finish(rc);
  std::printf("%s\n", out.p);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(acs_version()) +
               " — exact plane-variation calculus and constructive homeomorphisms"};
  app.require_subcommand(1);

  std::string scene_path, chain_path, id, out_path, svg_dir, exp_name;
  std::vector<std::string> line;
  int max_len = 0;
  long n = 0, trials = 0;
  unsigned long long seed = 0;
  bool inverse = false;

  auto* vf = app.add_subcommand("vf", "crossing count of a point list");
  vf->add_option("scene", scene_path, "scene file")->required();
  vf->add_option("list", id, "list name in the scene")->required();
  vf->add_option("--line", line, "line coefficients a b c (exact rationals); omit to maximize")
      ->expected(3);

  auto* var = app.add_subcommand("var", "variation lower bound of a sampled function");
  var->add_option("scene", scene_path, "scene file")->required();
  var->add_option("function", id, "function name in the scene")->required();
  var->add_option("--max-len", max_len, "cap on searched list length (0 = default)")
      ->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "flatten a polygon to a triangle");
  reduce->add_option("scene", scene_path, "scene file")->required();
  reduce->add_option("polygon", id, "polygon name in the scene")->required();
  reduce->add_option("--out", out_path, "chain file to write")->required();
  reduce->add_option("--svg", svg_dir, "directory for per-step frames");

  auto* normalize = app.add_subcommand("normalize", "map a windowed region onto the reference");
  normalize->add_option("scene", scene_path, "scene file")->required();
  normalize->add_option("region", id, "region name in the scene")->required();
  normalize->add_option("--out", out_path, "chain file to write")->required();
  normalize->add_option("--svg", svg_dir, "directory for per-step frames");

  auto* apply = app.add_subcommand("apply", "push a scene through a chain");
  apply->add_option("chain", chain_path, "chain file")->required();
  apply->add_option("scene", scene_path, "scene file")->required();
  apply->add_flag("--inverse", inverse, "apply the inverse chain");
  apply->add_option("--out", out_path, "scene file to write (default: stdout)");

  auto* experiment = app.add_subcommand("experiment", "run a bundled experiment");
  experiment
      ->add_option("name", exp_name,
                   "disk-square | fuzz-hpa | fuzz-lpa | cn | norm-examples")
      ->required();
  experiment->add_option("--n", n, "size parameter (0 = default)");
  experiment->add_option("--trials", trials, "trial count (0 = default)");
  experiment->add_option("--seed", seed, "random seed (ACSIGMA_SEED overrides)");
  experiment->add_option("--svg", svg_dir, "directory for plots");

  CLI11_PARSE(app, argc, argv);

  if (vf->parsed()) return cmd_vf(scene_path, id, line);
  if (var->parsed()) return cmd_var(scene_path, id, max_len);
  if (reduce->parsed()) return cmd_transform(false, scene_path, id, out_path, svg_dir);
  if (normalize->parsed()) return cmd_transform(true, scene_path, id, out_path, svg_dir);
  if (apply->parsed()) return cmd_apply(chain_path, scene_path, inverse, out_path);
  if (experiment->parsed()) return cmd_experiment(exp_name, n, trials, seed, svg_dir);
  return 1;
}
