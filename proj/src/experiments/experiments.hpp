#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "experiments/random_gen.hpp"
#include "variation/variation.hpp"

namespace acs {

// ---------------------------------------------------------------------------
// Square-vs-disk growth.  A fixed gauge homeomorphism h carries the unit
// square onto a closed disk; for each even n an alternating list of boundary
// and near-boundary image points is built whose values under the slab ramp
// min(y/delta, 1) alternate 0 and 1.  The list is certified to be in strictly
// convex position (exact test on the dyadic coordinates), which caps its
// crossing count at 2, so the variation of the transported ramp grows at
// least like n/2 while its source norm stays 2.  This module alone computes
// with floating point; every certified claim is re-checked exactly after an
// exact double-to-rational conversion.
// ---------------------------------------------------------------------------

struct DiskSquareRow {
  int n = 0;
  double eps_n = 0;    // smallest spacing among the mapped base points
  double delta_n = 0;  // accepted ramp height, halved until certificates hold
  std::vector<Pt> list;  // alternating list, exact dyadic coordinates
  double ratio = 0;      // alternation count divided by the certified crossing bound 2
  bool convex_certified = false;
  std::size_t vf_exact = 0;  // enumerated crossing maximum of the list (expected 2)
};

struct DiskSquareTable {
  std::vector<DiskSquareRow> rows;
  double ac_reference = 2.0;  // sup-norm 1 + slab variation 1 of the source ramp
};

DiskSquareTable disk_square_growth(int n_max);

// ---------------------------------------------------------------------------
// Fuzz campaigns for the crossing-count comparison bounds.  Both walls hold
// for every instance, so any violation is a bug: the campaign throws
// ViolationFound with the campaign seed and trial index in the message.
//   half-plane gluings:  vf(S)/2 <= vf(image) <= 2 vf(S)
//   fan relocations:     vf(S)/(n+1)^2 <= vf(image) <= (n+1)^2 vf(S)
// Every 97th trial is a degenerate control with an exactly predicted ratio 1.
// ---------------------------------------------------------------------------

struct FuzzReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t degenerate_trials = 0;
  std::size_t violations = 0;
  double ratio_min = 1.0;  // smallest image/source crossing ratio seen
  double ratio_max = 1.0;  // largest
  std::size_t ratio_min_trial = 0;
  std::size_t ratio_max_trial = 0;
};

FuzzReport fuzz_hpa(std::size_t trials, std::uint64_t seed);
FuzzReport fuzz_lpa(std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Empirical study of the worst-case crossing-count drop through a fan
// relocation over a convex n-gon.  The proved wall is (n+1)^2; the report
// notes whether the observed maximum also stays under the sharper n+1.
// ---------------------------------------------------------------------------

struct CnObservation {
  std::size_t n = 0;
  double observed_ratio = 1.0;  // max over trials of vf(S)/vf(image)
  std::size_t trial_count = 0;
  std::uint64_t seed = 0;
  bool within_conjectured_bound = true;  // observed maximum <= n+1, exact check
  std::size_t argmax_trial = 0;
};

CnObservation cn_experiment(std::size_t n, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Worked norm computations, all exact.
//   - Three collinear points with the middle-spike 0/1 function: variation 2,
//     norm 3; on the right-angle corner set no 0/1-valued function tops
//     variation 1 or norm 2.
//   - The ridge max(1-y, 0) on the bent quadrilateral (1,0),(0,4),(-1,0),
//     (0,2): sampled norm exactly 2.
//   - Transporting the ridge through the square-to-quadrilateral gluing and
//     walking the segment between the two support witnesses forces curve
//     variation 2.
// ---------------------------------------------------------------------------

struct NormExamplesReport {
  Rat collinear_spike_var;  // 2
  Rat collinear_spike_norm;  // 3
  Rat corner_max_var;        // 1, maximum over all eight 0/1-valued functions
  Rat corner_max_norm;       // 2
  Rat ridge_norm;            // 2
  Rat cut_curve_cvar;        // 2
  Rat constant_norm;         // 1
};

NormExamplesReport norm_examples();

std::string report_text(const DiskSquareTable& t);
std::string report_text(const FuzzReport& r);
std::string report_text(const CnObservation& o);
std::string report_text(const NormExamplesReport& r);

}  // namespace acs
