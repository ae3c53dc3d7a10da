#include "experiments/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace acs {

namespace {

Rat rat_of_double(double d) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

std::string fmt_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", d);
  return buf;
}

// The gauge square-to-disk map on the centered square: pushes each square
// level set onto the circle of the same radius.
std::array<double, 2> gauge(double x, double y) {
  if (x == 0.0 && y == 0.0) return {0.0, 0.0};
  double ninf = std::max(std::fabs(x), std::fabs(y));
  double n2 = std::hypot(x, y);
  double s = ninf / n2;
  return {x * s, y * s};
}

std::array<double, 2> square_to_disk(double x, double y) { return gauge(x - 0.5, y - 0.5); }

// Strict convex position in cyclic list order: every consecutive triple turns
// the same way.  Caps the crossing count of the list at 2.
bool strictly_convex_cycle(const std::vector<Pt>& q) {
  std::size_t m = q.size();
  if (m < 3) return false;
  int s0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    int s = orient(q[i], q[(i + 1) % m], q[(i + 2) % m]);
    if (s == 0) return false;
    if (s0 == 0) s0 = s;
    if (s != s0) return false;
  }
  return true;
}

Pt centroid(const Polygon& p) {
  Pt acc{0, 0};
  for (const Pt& v : p.v) acc = acc + v;
  return scale(rat(1, static_cast<long>(p.size())), acc);
}

std::vector<Pt> list_in_right_halfplane(Rng& g) {
  std::size_t n = static_cast<std::size_t>(rnd_long(g, 1, 12));
  std::vector<Pt> out;
  std::set<Pt, PtLess> seen;
  while (out.size() < n) {
    Pt p{random_rat(g, 1, 8, 6), random_rat(g, -8, 8, 6)};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace

DiskSquareTable disk_square_growth(int n_max) {
  if (n_max < 2 || n_max % 2 != 0) fail(Err::Degenerate, "growth table needs an even bound >= 2");
  DiskSquareTable table;
  for (int n = 2; n <= n_max; n += 2) {
    DiskSquareRow row;
    row.n = n;
    std::vector<std::array<double, 2>> base(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) base[static_cast<std::size_t>(k)] = square_to_disk(double(k) / n, 0.0);
    double eps = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      auto& a = base[static_cast<std::size_t>(k)];
      auto& b = base[static_cast<std::size_t>(k) + 1];
      eps = std::min(eps, std::hypot(a[0] - b[0], a[1] - b[1]));
    }
    row.eps_n = eps;
    double delta = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<std::array<double, 2>> lifted(static_cast<std::size_t>(n) + 1);
      double disp = 0.0;
      for (int k = 0; k <= n; ++k) {
        lifted[static_cast<std::size_t>(k)] = square_to_disk(double(k) / n, delta);
        auto& p = base[static_cast<std::size_t>(k)];
        auto& q = lifted[static_cast<std::size_t>(k)];
        disp = std::max(disp, std::hypot(p[0] - q[0], p[1] - q[1]));
      }
      if (disp < eps / 2) {
        std::vector<Pt> exact;
        for (int k = 0; k <= n; ++k) {
          auto& q = (k % 2 == 0) ? base[static_cast<std::size_t>(k)] : lifted[static_cast<std::size_t>(k)];
          exact.push_back(Pt{rat_of_double(q[0]), rat_of_double(q[1])});
        }
        if (strictly_convex_cycle(exact)) {
          std::size_t vf = vf_max(exact).value;
          if (vf == 2) {
            row.delta_n = delta;
            row.list = exact;
            row.convex_certified = true;
            row.vf_exact = vf;
            break;
          }
        }
      }
      delta /= 2;
    }
    // The ramp value alternates 0 at the base points and 1 at the lifted
    // ones, so the curve variation of the list is exactly n.
    double cvar = 0.0;
    for (int k = 1; k <= n; ++k) cvar += 1.0;
    row.ratio = cvar / 2.0;
    table.rows.push_back(std::move(row));
  }
  return table;
}

FuzzReport fuzz_hpa(std::size_t trials, std::uint64_t seed) {
  FuzzReport rep;
  rep.campaign = "hpa";
  rep.seed = seed;
  rep.trials = trials;
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng g = trial_rng(seed, t);
    bool degenerate = (t % 97 == 0);
    HpaMap m;
    std::vector<Pt> S;
    if (degenerate) {
      m = random_hpa_on_line(g, line_from_coeffs(rat(1), rat(0), rat(0)));
      S = list_in_right_halfplane(g);
      ++rep.degenerate_trials;
    } else {
      m = random_hpa(g);
      S = random_list(g, 1, 12);
    }
    std::vector<Pt> img;
    img.reserve(S.size());
    for (const Pt& p : S) img.push_back(apply(m, p));
    std::size_t va = vf_max(S).value;
    std::size_t vb = vf_max(img).value;
    bool ok = degenerate ? (va == vb) : (2 * vb >= va && vb <= 2 * va);
    double r = double(vb) / double(va);
    if (first || r < rep.ratio_min) {
      rep.ratio_min = r;
      rep.ratio_min_trial = t;
    }
    if (first || r > rep.ratio_max) {
      rep.ratio_max = r;
      rep.ratio_max_trial = t;
    }
    first = false;
    if (!ok) {
      ++rep.violations;
      fail(Err::ViolationFound,
           "half-plane crossing bound violated: campaign=hpa trial=" + std::to_string(t) +
               " seed=" + std::to_string(seed) + " vf=" + std::to_string(va) +
               " image_vf=" + std::to_string(vb));
    }
  }
  return rep;
}

FuzzReport fuzz_lpa(std::size_t trials, std::uint64_t seed) {
  FuzzReport rep;
  rep.campaign = "lpa";
  rep.seed = seed;
  rep.trials = trials;
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng g = trial_rng(seed, t);
    std::size_t n = static_cast<std::size_t>(rnd_long(g, 3, 8));
    bool degenerate = (t % 97 == 0);
    LpaMap m;
    if (degenerate) {
      Polygon C = random_convex_polygon(g, n);
      Pt c = centroid(C);
      m = make_lpa(C, affine_identity(), c, c);
      ++rep.degenerate_trials;
    } else {
      m = random_lpa(g, n);
    }
    std::vector<Pt> S = random_list(g, 1, 10);
    std::vector<Pt> img;
    img.reserve(S.size());
    for (const Pt& p : S) img.push_back(apply(m, p));
    std::size_t va = vf_max(S).value;
    std::size_t vb = vf_max(img).value;
    std::size_t wall = (n + 1) * (n + 1);
    bool ok = degenerate ? (img == S && va == vb) : (va <= wall * vb && vb <= wall * va);
    double r = double(vb) / double(va);
    if (first || r < rep.ratio_min) {
      rep.ratio_min = r;
      rep.ratio_min_trial = t;
    }
    if (first || r > rep.ratio_max) {
      rep.ratio_max = r;
      rep.ratio_max_trial = t;
    }
    first = false;
    if (!ok) {
      ++rep.violations;
      fail(Err::ViolationFound,
           "fan relocation crossing bound violated: campaign=lpa trial=" + std::to_string(t) +
               " seed=" + std::to_string(seed) + " n=" + std::to_string(n) +
               " vf=" + std::to_string(va) + " image_vf=" + std::to_string(vb));
    }
  }
  return rep;
}

CnObservation cn_experiment(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 3) fail(Err::Degenerate, "fan domains need at least 3 vertices");
  CnObservation obs;
  obs.n = n;
  obs.trial_count = trials;
  obs.seed = seed;
  std::size_t best_va = 1, best_vb = 1;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng g = trial_rng(seed, t);
    bool identity_trial = (t % 53 == 0);
    LpaMap m;
    if (identity_trial) {
      Polygon C = random_convex_polygon(g, n);
      Pt c = centroid(C);
      m = make_lpa(C, affine_identity(), c, c);
    } else {
      m = random_lpa(g, n);
    }
    std::vector<Pt> S = random_list(g, 2, 10);
    std::vector<Pt> img;
    img.reserve(S.size());
    for (const Pt& p : S) img.push_back(apply(m, p));
    std::size_t va = vf_max(S).value;
    std::size_t vb = vf_max(img).value;
    std::size_t wall = (n + 1) * (n + 1);
    if (identity_trial && va != vb)
      fail(Err::ViolationFound, "identity relocation changed a crossing count: trial=" +
                                    std::to_string(t) + " seed=" + std::to_string(seed));
    if (va > wall * vb)
      fail(Err::ViolationFound,
           "fan relocation crossing bound violated: campaign=cn trial=" + std::to_string(t) +
               " seed=" + std::to_string(seed) + " n=" + std::to_string(n) +
               " vf=" + std::to_string(va) + " image_vf=" + std::to_string(vb));
    if (va * best_vb > best_va * vb) {  // va/vb improved
      best_va = va;
      best_vb = vb;
      obs.argmax_trial = t;
    }
  }
  obs.observed_ratio = double(best_va) / double(best_vb);
  obs.within_conjectured_bound = best_va <= (n + 1) * best_vb;
  return obs;
}

NormExamplesReport norm_examples() {
  NormExamplesReport rep;

  // Middle spike on three collinear points.
  {
    std::vector<Pt> dom = {Pt{rat(0), rat(0)}, Pt{rat(1), rat(0)}, Pt{rat(2), rat(0)}};
    std::vector<Cx> vals = {Cx{rat(0), rat(0)}, Cx{rat(1), rat(0)}, Cx{rat(0), rat(0)}};
    NormReport nr = bv_norm_estimate(make_function(dom, vals));
    rep.collinear_spike_var = nr.var.lo;
    rep.collinear_spike_norm = nr.norm.lo;
  }

  // All eight 0/1-valued functions on the right-angle corner set.
  {
    std::vector<Pt> dom = {Pt{rat(0), rat(0)}, Pt{rat(1), rat(0)}, Pt{rat(0), rat(1)}};
    Rat best_var{0}, best_norm{0};
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<Cx> vals;
      for (int i = 0; i < 3; ++i) vals.push_back(Cx{rat((mask >> i) & 1), rat(0)});
      NormReport nr = bv_norm_estimate(make_function(dom, vals));
      best_var = rat_max(best_var, nr.var.lo);
      best_norm = rat_max(best_norm, nr.norm.lo);
    }
    rep.corner_max_var = best_var;
    rep.corner_max_norm = best_norm;

    std::vector<Cx> ones(3, Cx{rat(1), rat(0)});
    rep.constant_norm = bv_norm_estimate(make_function(dom, ones)).norm.lo;
  }

  // Ridge max(1-y, 0) sampled on the bent quadrilateral.
  auto ridge = [](const Pt& p) { return rat_max(rat(1) - p.y, rat(0)); };
  {
    std::vector<Pt> dom = {Pt{rat(1), rat(0)},        Pt{rat(0), rat(4)},
                           Pt{rat(-1), rat(0)},       Pt{rat(0), rat(2)},
                           Pt{rat(1, 2), rat(3, 2)},  Pt{rat(-1, 2), rat(3, 2)},
                           Pt{rat(3, 4), rat(3, 4)}};
    std::vector<Cx> vals;
    for (const Pt& p : dom) vals.push_back(Cx{ridge(p), rat(0)});
    rep.ridge_norm = bv_norm_estimate(make_function(dom, vals)).norm.lo;
  }

  // Transport the ridge through the square-to-quadrilateral gluing and walk
  // the segment joining the two support witnesses; the glue line sits between
  // them, so the transported values swing 1 -> 0 -> 1.
  {
    Line glue = line_through(Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)});
    Affine h1 = affine_from_triangles({Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)}, Pt{rat(1), rat(0)}},
                                      {Pt{rat(0), rat(2)}, Pt{rat(0), rat(4)}, Pt{rat(1), rat(0)}});
    Affine h2 = affine_from_triangles({Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)}, Pt{rat(0), rat(1)}},
                                      {Pt{rat(0), rat(2)}, Pt{rat(0), rat(4)}, Pt{rat(-1), rat(0)}});
    HpaMap H = make_hpa(glue, h1, h2);
    std::vector<Pt> curve = {Pt{rat(0), rat(1)}, Pt{rat(1, 2), rat(1, 2)}, Pt{rat(1), rat(0)}};
    std::vector<Cx> vals;
    for (const Pt& z : curve) vals.push_back(Cx{ridge(apply(H, z)), rat(0)});
    rep.cut_curve_cvar = cvar_values(vals).lo;
  }

  return rep;
}

std::string report_text(const DiskSquareTable& t) {
  std::string out = "square-to-disk growth (source reference norm = " + fmt_double(t.ac_reference) + ")\n";
  for (const DiskSquareRow& r : t.rows) {
    out += "n=" + std::to_string(r.n) + " eps=" + fmt_double(r.eps_n) +
           " delta=" + fmt_double(r.delta_n) + " ratio=" + fmt_double(r.ratio) +
           " certified=" + (r.convex_certified ? "yes" : "no") +
           " vf=" + std::to_string(r.vf_exact) + "\n";
  }
  return out;
}

std::string report_text(const FuzzReport& r) {
  return "campaign=" + r.campaign + "\nseed=" + std::to_string(r.seed) +
         "\ntrials=" + std::to_string(r.trials) +
         "\ndegenerate=" + std::to_string(r.degenerate_trials) +
         "\nviolations=" + std::to_string(r.violations) +
         "\nratio_min=" + fmt_double(r.ratio_min) + " (trial " + std::to_string(r.ratio_min_trial) +
         ")\nratio_max=" + fmt_double(r.ratio_max) + " (trial " + std::to_string(r.ratio_max_trial) +
         ")\n";
}

std::string report_text(const CnObservation& o) {
  return "fan relocation worst-case study\nn=" + std::to_string(o.n) +
         "\ntrials=" + std::to_string(o.trial_count) + "\nseed=" + std::to_string(o.seed) +
         "\nobserved_ratio=" + fmt_double(o.observed_ratio) + " (trial " +
         std::to_string(o.argmax_trial) + ")\nproved_wall=" +
         std::to_string((o.n + 1) * (o.n + 1)) +
         "\nwithin_n_plus_1=" + (o.within_conjectured_bound ? "yes" : "no") + "\n";
}

std::string report_text(const NormExamplesReport& r) {
  return "worked norm computations (exact)\ncollinear_spike_var=" +
         rat_to_string(r.collinear_spike_var) +
         "\ncollinear_spike_norm=" + rat_to_string(r.collinear_spike_norm) +
         "\ncorner_max_var=" + rat_to_string(r.corner_max_var) +
         "\ncorner_max_norm=" + rat_to_string(r.corner_max_norm) +
         "\nridge_norm=" + rat_to_string(r.ridge_norm) +
         "\ncut_curve_cvar=" + rat_to_string(r.cut_curve_cvar) +
         "\nconstant_norm=" + rat_to_string(r.constant_norm) + "\n";
}

}  // namespace acs
