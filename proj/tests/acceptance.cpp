// Acceptance gate: ten end-to-end checks, one printed line each.  Every
// tolerance and time budget is pinned here.  argv[1] is the bundled samples
// directory (default "samples").  Exit status 0 iff every check passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "experiments/experiments.hpp"
#include "experiments/random_gen.hpp"
#include "io/scene.hpp"
#include "polyalg/genus.hpp"
#include "variation/variation.hpp"

using namespace acs;

namespace {

std::string g_samples = "samples";
int g_checks = 0;
int g_failures = 0;

// body returns "" on pass or a short reason on fail; overrunning the budget
// fails even when the checks inside all hold
void gate(const char* name, double limit_s, const std::function<std::string()>& body) {
  ++g_checks;
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (detail.empty() && secs >= limit_s) detail = "over time budget";
  bool ok = detail.empty();
  std::printf("[%2d/10] %s  %-32s %8.3f s  (limit %g s)\n", g_checks, ok ? "PASS" : "FAIL", name,
              secs, limit_s);
  if (!ok) {
    std::printf("        %s\n", detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

#define EXPECT(cond, msg)                            \
  do {                                               \
    if (!(cond)) {                                   \
      std::ostringstream os_;                        \
      os_ << msg;                                    \
      return os_.str();                              \
    }                                                \
  } while (0)

std::vector<Pt> hook_list() {
  return {{rat(1), rat(0)}, {rat(2), rat(0)}, {rat(3), rat(1)},
          {rat(4), rat(-1)}, {rat(5), rat(0)}, {rat(6), rat(0)},
          {rat(7), rat(0)}, {rat(8), rat(1)}, {rat(9), rat(0)}};
}

std::string check_hook_crossings() {
  std::vector<Pt> pts = hook_list();
  Line axis = line_from_coeffs(rat(0), rat(1), rat(0));
  std::vector<std::size_t> idx = crossing_segments(pts, axis);
  const std::vector<std::size_t> want{0, 2, 4, 7};
  EXPECT(idx == want, "crossing segments mismatch");
  EXPECT(vf_on_line(pts, axis) == 4, "count is not 4");
  return "";
}

std::string check_idempotent_gap() {
  // one-line domain {0,1,2}: the middle-spike 0/1 function has variation
  // exactly 2, norm exactly 3
  SampledFunction spike = make_function(
      {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}}, {Cx{}, Cx{rat(1)}, Cx{}});
  NormReport a = bv_norm_estimate(spike);
  EXPECT(a.var_exact && a.var.exact() && a.var.lo == rat(2), "spike variation != 2");
  EXPECT(a.norm.exact() && a.norm.lo == rat(3), "spike norm != 3");

  // corner domain {0, 1, i}: every 0/1-valued function has variation equal
  // to its largest pairwise value difference (so never above 1), and the
  // bounded search at list length 6 attains that exactly
  const std::vector<Pt> corners{{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
  VarOptions opt;
  opt.max_len = 6;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Cx> vals;
    Rat maxval(0), maxdiff(0);
    for (unsigned i = 0; i < 3; ++i) {
      Rat v = rat((mask >> i) & 1);
      vals.push_back(Cx{v});
      maxval = rat_max(maxval, v);
      for (const Cx& w : vals) maxdiff = rat_max(maxdiff, rat_abs(v - w.re));
    }
    NormReport nr = bv_norm_estimate(make_function(corners, vals), opt);
    EXPECT(nr.var.exact() && nr.var.lo == maxdiff,
           "mask " << mask << ": variation bound is not the max pairwise difference");
    EXPECT(nr.var.lo <= rat(1), "mask " << mask << ": variation bound above 1");
    EXPECT(nr.norm.exact() && nr.norm.lo == maxval + maxdiff,
           "mask " << mask << ": norm mismatch");
  }
  return "";
}

std::string check_hpa_fuzz() {
  FuzzReport r = fuzz_hpa(10000, 20260823);
  EXPECT(r.trials == 10000, "wrong trial count");
  EXPECT(r.violations == 0, "found " << r.violations << " violations");
  EXPECT(r.degenerate_trials > 0, "degenerate controls did not run");
  return "";
}

std::string check_lpa_fuzz() {
  FuzzReport r = fuzz_lpa(10000, 20260823);
  EXPECT(r.trials == 10000, "wrong trial count");
  EXPECT(r.violations == 0, "found " << r.violations << " violations");
  EXPECT(r.degenerate_trials > 0, "degenerate controls did not run");
  return "";
}

std::string check_polygon_reduction() {
  for (std::size_t trial = 0; trial < 200; ++trial) {
    std::size_t n = 4 + trial % 9;  // 4..12
    Rng g = trial_rng(0xACC5, trial);
    Polygon p = random_simple_polygon(g, n);
    Certificate cert = reduce_polygon_to_triangle(p);
    EXPECT(cert.chain.steps.size() == n - 3,
           "trial " << trial << ": " << cert.chain.steps.size() << " steps for n=" << n);
    for (const Step& s : cert.chain.steps)
      EXPECT(std::holds_alternative<LpaMap>(s), "trial " << trial << ": non-lpa step");
    EXPECT(cert.snapshots.front() == p && cert.snapshots.back().size() == 3,
           "trial " << trial << ": bad snapshots");

    Certificate again = reduce_polygon_to_triangle(p);
    EXPECT(again.chain == cert.chain && again.snapshots == cert.snapshots,
           "trial " << trial << ": replay differs");

    Chain inv = inverse(cert.chain);
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 50; ++j) {
        Pt q{rat(2 * i - 50, 4), rat(2 * j - 50, 4)};  // [-12.5, 12] x same
        EXPECT(apply(inv, apply(cert.chain, q)) == q,
               "trial " << trial << ": grid point not restored");
      }
  }
  return "";
}

std::string check_triangle_relocation() {
  for (std::size_t trial = 0; trial < 50; ++trial) {
    Rng g = trial_rng(0x7143, trial);
    long x0 = rnd_long(g, -10, 10), y0 = rnd_long(g, -10, 10);
    long w = rnd_long(g, 6, 14), h = rnd_long(g, 6, 14);
    Rectangle R = make_rectangle({{rat(x0), rat(y0)},
                                  {rat(x0 + w), rat(y0)},
                                  {rat(x0 + w), rat(y0 + h)},
                                  {rat(x0), rat(y0 + h)}});
    // triangles with margin 1 to the rectangle boundary
    auto rand_tri = [&]() {
      for (;;) {
        Pt a{rat(x0) + random_rat(g, 1, w - 1, 4), rat(y0) + random_rat(g, 1, h - 1, 4)};
        Pt b{rat(x0) + random_rat(g, 1, w - 1, 4), rat(y0) + random_rat(g, 1, h - 1, 4)};
        Pt c{rat(x0) + random_rat(g, 1, w - 1, 4), rat(y0) + random_rat(g, 1, h - 1, 4)};
        if (orient(a, b, c) == 0) continue;
        return make_polygon({a, b, c});
      }
    };
    Polygon T = rand_tri(), T2 = rand_tri();
    Certificate cert = move_triangle_in_rectangle(T, T2, R);

    EXPECT(map_polygon(cert.chain, T) == T2, "trial " << trial << ": image != target");
    for (const Pt& v : T.v) {
      Pt img = apply(cert.chain, v);
      bool on_vertex = false;
      for (const Pt& u : T2.v) on_vertex = on_vertex || (img == u);
      EXPECT(on_vertex, "trial " << trial << ": vertex misses target vertex");
    }
    EXPECT(map_polygon(cert.chain, R.p) == R.p, "trial " << trial << ": rectangle moved");

    std::size_t fixed = 0;
    while (fixed < 1000) {
      Pt q{rat(x0) + random_rat(g, -12, w + 12, 3), rat(y0) + random_rat(g, -12, h + 12, 3)};
      if (locate(R.p, q) != Where::Outside) continue;
      EXPECT(apply(cert.chain, q) == q, "trial " << trial << ": exterior point moved");
      ++fixed;
    }
  }
  return "";
}

std::string check_region_normalization() {
  for (std::size_t n = 1; n <= 3; ++n) {
    Scene sc = load_scene(g_samples + "/genus" + std::to_string(n) + ".json");
    const GenusRegion& r = scene_region(sc, "R");
    EXPECT(r.genus() == n, "sample genus" << n << " has genus " << r.genus());
    RegionCertificate cert = normalize_genus_region(r);
    EXPECT(cert.snapshots.back() == standard_tau(n),
           "genus " << n << ": final region is not the reference");
    for (const GenusRegion& snap : cert.snapshots)
      EXPECT(snap.genus() == n, "genus " << n << ": genus changed mid-chain");
    EXPECT(cert.snapshots.size() == cert.chain.steps.size() + 1,
           "genus " << n << ": snapshot count mismatch");
    for (std::size_t i = 0; i < cert.chain.steps.size(); ++i)
      EXPECT(map_region(cert.chain.steps[i], cert.snapshots[i]) == cert.snapshots[i + 1],
             "genus " << n << ": step " << i << " replay differs");
  }
  return "";
}

std::string check_disk_square_growth() {
  DiskSquareTable t = disk_square_growth(20);
  EXPECT(t.rows.size() == 10, "expected rows n=2,4,...,20");
  for (const DiskSquareRow& row : t.rows) {
    EXPECT(row.convex_certified, "n=" << row.n << ": convex-position certificate failed");
    EXPECT(row.vf_exact == 2, "n=" << row.n << ": crossing count " << row.vf_exact);
    EXPECT(row.ratio >= row.n / 2.0 - 1e-6,
           "n=" << row.n << ": ratio " << row.ratio << " below " << row.n / 2.0 - 1e-6);
  }
  return "";
}

std::string check_two_ears() {
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    std::size_t n = 4 + trial % 17;  // 4..20
    Rng g = trial_rng(0xEA25, trial);
    Polygon p = random_simple_polygon(g, n);
    std::size_t ears = find_ears(p).size();
    EXPECT(ears >= 2, "trial " << trial << " (n=" << n << "): only " << ears << " ears");
  }
  return "";
}

std::string check_crossing_max_oracles() {
  for (std::size_t trial = 0; trial < 200; ++trial) {
    Rng g = trial_rng(0x0FAC, trial);
    std::vector<Pt> pts = random_list(g, 2, 10);
    VfResult exact = vf_max(pts);
    std::size_t sampled = vf_max_sampled(pts, 100000, 1000 + trial);
    EXPECT(sampled <= exact.value,
           "trial " << trial << ": sampled " << sampled << " beats enumerated " << exact.value);
    EXPECT(sampled == exact.value,
           "trial " << trial << ": sampled " << sampled << " != enumerated " << exact.value);
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_samples = argv[1];
  rat_from_string("1/3");  // warm up the arithmetic stack before timing

  gate("hook-list-crossings", 0.001, check_hook_crossings);
  gate("idempotent-variation-gap", 1.0, check_idempotent_gap);
  gate("halfplane-map-crossing-bounds", 60.0, check_hpa_fuzz);
  gate("piecewise-map-crossing-bounds", 120.0, check_lpa_fuzz);
  gate("polygon-reduction-certificates", 120.0, check_polygon_reduction);
  gate("triangle-relocation", 60.0, check_triangle_relocation);
  gate("region-normalization-goldens", 300.0, check_region_normalization);
  gate("disk-square-growth", 60.0, check_disk_square_growth);
  gate("two-ears", 30.0, check_two_ears);
  gate("crossing-max-oracle-agreement", 120.0, check_crossing_max_oracles);

  std::printf("%d/%d passed\n", g_checks - g_failures, g_checks);
  return g_failures == 0 ? 0 : 1;
}
