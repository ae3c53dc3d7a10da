#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "geom/core.hpp"

namespace acs {

// ---------------------------------------------------------------------------
// Crossing counts for ordered finite lists of plane points.
// ---------------------------------------------------------------------------

enum class SideLabel : int { Right = -1, On = 0, Left = 1 };

std::vector<SideLabel> side_labels(const std::vector<Pt>& pts, const Line& l);

// Indices i of the list segments (x_i, x_{i+1}) that count as crossings of a
// line, given only the side labels of the points.  A segment counts when any
// of these hold:
//   - its endpoints lie strictly on opposite sides;
//   - it is the first segment and its first point lies on the line;
//   - its first point lies on the line and the previous point does not;
//   - it is the last segment, its first point is off the line and its second
//     point is on it.
// A single-point list counts 1 when the point lies on the line, else 0.
std::vector<std::size_t> crossings_from_labels(const std::vector<SideLabel>& lab);
std::size_t vf_from_labels(const std::vector<SideLabel>& lab);

std::vector<std::size_t> crossing_segments(const std::vector<Pt>& pts, const Line& l);
std::size_t vf_on_line(const std::vector<Pt>& pts, const Line& l);

struct VfResult {
  std::size_t value = 0;
  // Base line whose labeling (possibly after an infinitesimal translation or
  // rotation) attains the maximum; empty only for lists with a single
  // distinct position, where any line through that position attains it.
  std::optional<Line> witness;
  std::vector<SideLabel> labels;        // attaining labeling
  std::vector<std::size_t> crossings;   // counted segments of that labeling
};

// Exact maximum of the crossing count over all lines of the plane.  Candidate
// lines are the lines through pairs of distinct positions; for each, the
// labelings reachable by infinitesimal translations (all on-line points to
// one side) and rotations (on-line points split monotonically by position
// along the line, about each position and each gap midpoint) are evaluated.
// Any line of the plane can be moved onto a pair of positions without
// lowering its count, and its labeling is then one of the evaluated ones.
VfResult vf_max(const std::vector<Pt>& pts);

// Randomized lower-bound oracle: maximum of the crossing count over sampled
// lines (uniform lines, lines through pairs of positions, and perturbed pair
// lines).  Deterministic for a fixed seed.
std::size_t vf_max_sampled(const std::vector<Pt>& pts, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Certified enclosures of real quantities (sums of square roots).
// ---------------------------------------------------------------------------

struct Enclosure {
  Rat lo{0};
  Rat hi{0};
  bool exact() const { return lo == hi; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  bool operator==(const Enclosure&) const = default;
};

Enclosure enc(const Rat& v);
Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure enc_max(const Enclosure& a, const Enclosure& b);
Enclosure enc_div(const Enclosure& a, const Rat& positive);

// [lo, hi] with lo <= sqrt(a) <= hi; exact for perfect squares, otherwise a
// 100-bit directed-rounding enclosure.
Enclosure sqrt_enclosure(const Rat& a);

// ---------------------------------------------------------------------------
// Complex-valued functions on finite point sets and their variation.
// ---------------------------------------------------------------------------

struct Cx {
  Rat re{0};
  Rat im{0};
  bool operator==(const Cx&) const = default;
};

Cx operator-(const Cx& a, const Cx& b);
Rat abs2(const Cx& z);                 // |z|^2, exact
Enclosure abs_enclosure(const Cx& z);  // |z|

struct SampledFunction {
  std::vector<Pt> domain;  // distinct points
  std::vector<Cx> value;   // parallel to domain
};

SampledFunction make_function(std::vector<Pt> domain, std::vector<Cx> value);
const Cx& value_at(const SampledFunction& f, const Pt& p);

// Sum of |f(x_i) - f(x_{i-1})| along a list of values / domain points.
Enclosure cvar_values(const std::vector<Cx>& vals);
Enclosure cvar(const SampledFunction& f, const std::vector<Pt>& list);

Enclosure sup_abs(const SampledFunction& f);

bool is_collinear_domain(const SampledFunction& f);

struct VarOptions {
  std::size_t max_len = 6;
  std::size_t beam_width = 64;
  std::size_t exhaustive_cap = 50000;
};

struct VarSearchResult {
  Enclosure ratio;                // best crossing-normalized variation found
  std::vector<std::size_t> list;  // indices into the domain
  std::size_t vf = 1;             // crossing count of that list
  bool exhaustive = false;        // repeat-free lists fully enumerated
};

// Lower bound for sup over lists of cvar(f,S)/vf(S): exhaustive search over
// repeat-free lists when their number fits under exhaustive_cap, plus a
// deterministic beam search over lists that may revisit points (immediate
// repeats are skipped: they add nothing to cvar and never lower vf).
VarSearchResult var_lower_bound(const SampledFunction& f, const VarOptions& opt = {});

// Exact value for a function whose domain lies on one line: the supremum is
// attained by the list sorted along the line, which has crossing count 1.
// Any other list gains cvar only by re-sweeping gaps, and a perpendicular
// line through a gap crossed k times forces vf >= k.
VarSearchResult var_exact_collinear(const SampledFunction& f);

struct NormReport {
  Enclosure sup;            // sup |f|
  Enclosure var;            // exact for collinear domains, else a lower bound
  Enclosure norm;           // sup + var
  bool var_exact = false;   // true when var is the exact supremum
  VarSearchResult search;
};

NormReport bv_norm_estimate(const SampledFunction& f, const VarOptions& opt = {});

// Push a function through an injective point map: g(h(x)) = f(x).  Two domain
// points mapping to one image with different values is an error.
SampledFunction transfer(const SampledFunction& f, const std::function<Pt(const Pt&)>& h);

}  // namespace acs
