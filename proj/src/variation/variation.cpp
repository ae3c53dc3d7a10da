#include "variation/variation.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace acs {

namespace {

int label_of_side(int s) { return s; }  // side sign: +1 left, 0 on, -1 right

std::size_t count_crossings(const std::vector<int>& lab) {
  const std::size_t n = lab.size();
  if (n == 0) fail(Err::Degenerate, "crossing count of empty list");
  if (n == 1) return lab[0] == 0 ? 1 : 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool hit = false;
    if (lab[i] * lab[i + 1] < 0)
      hit = true;
    else if (i == 0 && lab[0] == 0)
      hit = true;
    else if (i > 0 && lab[i] == 0 && lab[i - 1] != 0)
      hit = true;
    else if (i + 2 == n && lab[i] != 0 && lab[i + 1] == 0)
      hit = true;
    if (hit) ++c;
  }
  return c;
}

std::vector<std::size_t> crossing_indices(const std::vector<int>& lab) {
  const std::size_t n = lab.size();
  if (n == 0) fail(Err::Degenerate, "crossing count of empty list");
  std::vector<std::size_t> out;
  if (n == 1) {
    if (lab[0] == 0) out.push_back(0);
    return out;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool hit = false;
    if (lab[i] * lab[i + 1] < 0)
      hit = true;
    else if (i == 0 && lab[0] == 0)
      hit = true;
    else if (i > 0 && lab[i] == 0 && lab[i - 1] != 0)
      hit = true;
    else if (i + 2 == n && lab[i] != 0 && lab[i + 1] == 0)
      hit = true;
    if (hit) out.push_back(i);
  }
  return out;
}

std::vector<int> raw_labels(const std::vector<Pt>& pts, const Line& l) {
  std::vector<int> lab(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) lab[i] = label_of_side(side(l, pts[i]));
  return lab;
}

std::vector<SideLabel> to_side_labels(const std::vector<int>& lab) {
  std::vector<SideLabel> out(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) out[i] = static_cast<SideLabel>(lab[i]);
  return out;
}

// Precomputed data for maximizing the crossing count over lines: the distinct
// positions of a point set, every line through two of them, and per line the
// label and along-line parameter of every position.
struct VfTable {
  std::vector<Pt> pos;
  std::vector<std::size_t> pos_of;  // per original point: index into pos
  struct LineInfo {
    Line line;
    std::vector<int> label;  // per position
    std::vector<Rat> param;  // per position: dot(direction, p), increases along the line
  };
  std::vector<LineInfo> lines;
};

VfTable build_vf_table(const std::vector<Pt>& pts) {
  if (pts.empty()) fail(Err::Degenerate, "crossing maximum of empty list");
  VfTable t;
  std::map<Pt, std::size_t, PtLess> index;
  t.pos_of.reserve(pts.size());
  for (const Pt& p : pts) {
    auto it = index.find(p);
    if (it == index.end()) {
      it = index.emplace(p, t.pos.size()).first;
      t.pos.push_back(p);
    }
    t.pos_of.push_back(it->second);
  }
  std::set<Line, LineLess> seen;
  for (std::size_t i = 0; i < t.pos.size(); ++i)
    for (std::size_t j = i + 1; j < t.pos.size(); ++j)
      seen.insert(line_through(t.pos[i], t.pos[j]));
  for (const Line& l : seen) {
    VfTable::LineInfo info;
    info.line = l;
    Pt d = direction(l);
    info.label.resize(t.pos.size());
    info.param.resize(t.pos.size());
    for (std::size_t k = 0; k < t.pos.size(); ++k) {
      info.label[k] = label_of_side(side(l, t.pos[k]));
      info.param[k] = dot(d, t.pos[k]);
    }
    t.lines.push_back(std::move(info));
  }
  return t;
}

struct BestLabeling {
  std::size_t value = 0;
  std::vector<int> labels;
  int line_index = -1;
};

// Maximum crossing count for the sub-list of points given by indices into the
// original list the table was built from.  All candidate labelings are labels
// of real lines arbitrarily close to a table line, so the result never
// exceeds the true maximum; completeness is argued in vf_max's declaration.
BestLabeling vf_best(const VfTable& t, const std::vector<std::size_t>& idx) {
  if (idx.empty()) fail(Err::Degenerate, "crossing maximum of empty list");
  BestLabeling best;
  bool all_same = true;
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (t.pos_of[idx[k]] != t.pos_of[idx[0]]) {
      all_same = false;
      break;
    }
  if (all_same) {
    best.labels.assign(idx.size(), 0);
    best.value = count_crossings(best.labels);
    return best;  // any line through the single position; witness synthesized by caller
  }

  std::vector<int> lab(idx.size());
  std::vector<int> cand(idx.size());
  auto consider = [&](const std::vector<int>& labels, int line_index) {
    std::size_t v = count_crossings(labels);
    if (v > best.value) {
      best.value = v;
      best.labels = labels;
      best.line_index = line_index;
    }
  };

  for (std::size_t li = 0; li < t.lines.size(); ++li) {
    const auto& info = t.lines[li];
    bool any_on = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      lab[k] = info.label[t.pos_of[idx[k]]];
      if (lab[k] == 0) any_on = true;
    }
    consider(lab, static_cast<int>(li));
    if (!any_on) continue;

    // Translations: every on-line point moves to the same side.
    for (int dir : {+1, -1}) {
      cand = lab;
      for (auto& v : cand)
        if (v == 0) v = dir;
      consider(cand, static_cast<int>(li));
    }

    // Rotations about a position or a gap midpoint: on-line points split by
    // their parameter along the line, strict labels are preserved.
    std::vector<Rat> ts;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (lab[k] == 0) ts.push_back(info.param[t.pos_of[idx[k]]]);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rat> pivots = ts;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) pivots.push_back((ts[k] + ts[k + 1]) / 2);
    for (const Rat& c : pivots) {
      for (int dir : {+1, -1}) {
        cand = lab;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          if (lab[k] != 0) continue;
          int s = cmp(info.param[t.pos_of[idx[k]]], c);
          cand[k] = s == 0 ? 0 : s * dir;
        }
        consider(cand, static_cast<int>(li));
      }
    }
  }
  return best;
}

VfResult result_from_best(const VfTable& t, const std::vector<std::size_t>& idx,
                          const BestLabeling& best) {
  VfResult r;
  r.value = best.value;
  r.labels = to_side_labels(best.labels);
  r.crossings = crossing_indices(best.labels);
  if (best.line_index >= 0) {
    r.witness = t.lines[static_cast<std::size_t>(best.line_index)].line;
  } else {
    // single distinct position: any line through it attains the maximum
    const Pt& p = t.pos[t.pos_of[idx[0]]];
    r.witness = line_from_coeffs(rat(0), rat(1), -p.y);
  }
  return r;
}

}  // namespace

std::vector<SideLabel> side_labels(const std::vector<Pt>& pts, const Line& l) {
  return to_side_labels(raw_labels(pts, l));
}

std::vector<std::size_t> crossings_from_labels(const std::vector<SideLabel>& lab) {
  std::vector<int> raw(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) raw[i] = static_cast<int>(lab[i]);
  return crossing_indices(raw);
}

std::size_t vf_from_labels(const std::vector<SideLabel>& lab) {
  std::vector<int> raw(lab.size());
  for (std::size_t i = 0; i < lab.size(); ++i) raw[i] = static_cast<int>(lab[i]);
  return count_crossings(raw);
}

std::vector<std::size_t> crossing_segments(const std::vector<Pt>& pts, const Line& l) {
  return crossing_indices(raw_labels(pts, l));
}

std::size_t vf_on_line(const std::vector<Pt>& pts, const Line& l) {
  return count_crossings(raw_labels(pts, l));
}

VfResult vf_max(const std::vector<Pt>& pts) {
  VfTable t = build_vf_table(pts);
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return result_from_best(t, idx, vf_best(t, idx));
}

std::size_t vf_max_sampled(const std::vector<Pt>& pts, std::size_t trials, std::uint64_t seed) {
  if (pts.empty()) fail(Err::Degenerate, "crossing maximum of empty list");
  std::vector<Pt> pos(pts.begin(), pts.end());
  std::sort(pos.begin(), pos.end(), PtLess{});
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());

  std::vector<HPt> homo;
  homo.reserve(pts.size());
  for (const Pt& p : pts) homo.push_back(to_homo(p));

  std::mt19937_64 rng(seed);
  auto rnd_int = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto rnd_coord = [&]() { return rat(rnd_int(-48, 48), rnd_int(1, 8)); };
  auto rnd_tiny = [&]() {
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 20 + rng() % 20);
    return rat_of(Int(rnd_int(-3, 3)), den);
  };

  std::size_t best = 0;
  std::vector<int> lab(pts.size());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    unsigned mode = rng() % 4u;
    if (pos.size() < 2 && mode != 0) mode = 0;
    Pt a, b;
    switch (mode) {
      case 0:
        a = Pt{rnd_coord(), rnd_coord()};
        b = Pt{rnd_coord(), rnd_coord()};
        break;
      case 1: {
        std::size_t i = rng() % pos.size(), j = rng() % pos.size();
        a = pos[i];
        b = pos[j];
        break;
      }
      case 2: {
        std::size_t i = rng() % pos.size(), j = rng() % pos.size();
        a = Pt{pos[i].x + rnd_tiny(), pos[i].y + rnd_tiny()};
        b = Pt{pos[j].x + rnd_tiny(), pos[j].y + rnd_tiny()};
        break;
      }
      default: {
        std::size_t i = rng() % pos.size(), j = rng() % pos.size();
        a = pos[i];
        b = Pt{pos[j].x + rnd_tiny(), pos[j].y + rnd_tiny()};
        break;
      }
    }
    if (a == b) continue;
    Line l = line_through(a, b);
    for (std::size_t i = 0; i < homo.size(); ++i) lab[i] = label_of_side(side(l, homo[i]));
    best = std::max(best, count_crossings(lab));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Enclosures.
// ---------------------------------------------------------------------------

Enclosure enc(const Rat& v) { return {v, v}; }

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure enc_max(const Enclosure& a, const Enclosure& b) {
  return {rat_max(a.lo, b.lo), rat_max(a.hi, b.hi)};
}

Enclosure enc_div(const Enclosure& a, const Rat& positive) {
  if (sgn(positive) <= 0) fail(Err::DivideByZero, "enclosure divided by non-positive value");
  return {a.lo / positive, a.hi / positive};
}

namespace {

Rat rat_from_mpfr(mpfr_srcptr v) {
  mpf_t f;
  mpf_init2(f, mpfr_get_prec(v) + 32);
  mpfr_get_f(f, v, MPFR_RNDN);  // exact: target precision exceeds the source's
  Rat q{mpf_class(f)};
  mpf_clear(f);
  return q;
}

constexpr mpfr_prec_t kSqrtPrec = 100;

}  // namespace

Enclosure sqrt_enclosure(const Rat& a) {
  if (sgn(a) < 0) fail(Err::Degenerate, "square root of a negative value");
  if (auto r = rat_sqrt_exact(a)) return enc(*r);
  mpfr_t x, s;
  mpfr_init2(x, kSqrtPrec);
  mpfr_init2(s, kSqrtPrec);
  mpfr_set_q(x, a.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(s, x, MPFR_RNDD);
  Rat lo = rat_from_mpfr(s);
  mpfr_set_q(x, a.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(s, x, MPFR_RNDU);
  Rat hi = rat_from_mpfr(s);
  mpfr_clear(x);
  mpfr_clear(s);
  if (sgn(lo) < 0) lo = 0;
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Functions and variation search.
// ---------------------------------------------------------------------------

Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }

Rat abs2(const Cx& z) { return z.re * z.re + z.im * z.im; }

Enclosure abs_enclosure(const Cx& z) { return sqrt_enclosure(abs2(z)); }

SampledFunction make_function(std::vector<Pt> domain, std::vector<Cx> value) {
  if (domain.empty()) fail(Err::Degenerate, "function with empty domain");
  if (domain.size() != value.size())
    fail(Err::Degenerate, "domain and value lists differ in length");
  std::set<Pt, PtLess> seen(domain.begin(), domain.end());
  if (seen.size() != domain.size()) fail(Err::Degenerate, "repeated point in function domain");
  return {std::move(domain), std::move(value)};
}

const Cx& value_at(const SampledFunction& f, const Pt& p) {
  for (std::size_t i = 0; i < f.domain.size(); ++i)
    if (f.domain[i] == p) return f.value[i];
  fail(Err::PointOutsideDomain, "point not in function domain: " + pt_to_string(p));
}

Enclosure cvar_values(const std::vector<Cx>& vals) {
  if (vals.empty()) fail(Err::Degenerate, "variation of empty list");
  Enclosure total;
  for (std::size_t i = 1; i < vals.size(); ++i) total = total + abs_enclosure(vals[i] - vals[i - 1]);
  return total;
}

Enclosure cvar(const SampledFunction& f, const std::vector<Pt>& list) {
  std::vector<Cx> vals;
  vals.reserve(list.size());
  for (const Pt& p : list) vals.push_back(value_at(f, p));
  return cvar_values(vals);
}

Enclosure sup_abs(const SampledFunction& f) {
  Enclosure best = abs_enclosure(f.value[0]);
  for (std::size_t i = 1; i < f.value.size(); ++i)
    best = enc_max(best, abs_enclosure(f.value[i]));
  return best;
}

bool is_collinear_domain(const SampledFunction& f) {
  if (f.domain.size() <= 2) return true;
  Line l = line_through(f.domain[0], f.domain[1]);
  for (std::size_t i = 2; i < f.domain.size(); ++i)
    if (!on_line(l, f.domain[i])) return false;
  return true;
}

namespace {

// Pairwise |f(p_i) - f(p_j)| enclosures, shared by both search strategies.
std::vector<std::vector<Enclosure>> distance_table(const SampledFunction& f) {
  const std::size_t m = f.domain.size();
  std::vector<std::vector<Enclosure>> d(m, std::vector<Enclosure>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      d[i][j] = abs_enclosure(f.value[i] - f.value[j]);
      d[j][i] = d[i][j];
    }
  return d;
}

struct SearchState {
  const VfTable& table;
  const std::vector<std::vector<Enclosure>>& dist;
  VarSearchResult best;

  void offer(const std::vector<std::size_t>& list, const Enclosure& cv) {
    BestLabeling lb = vf_best(table, list);
    Rat denom(static_cast<long>(lb.value));
    Enclosure ratio = enc_div(cv, denom);
    if (ratio.lo > best.ratio.lo ||
        (ratio.lo == best.ratio.lo && ratio.hi > best.ratio.hi)) {
      best.ratio = ratio;
      best.list = list;
      best.vf = lb.value;
    }
  }
};

void exhaustive_dfs(SearchState& st, std::vector<std::size_t>& list, std::vector<char>& used,
                    const Enclosure& cv, std::size_t max_len) {
  st.offer(list, cv);
  if (list.size() >= max_len) return;
  const std::size_t m = used.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (used[j]) continue;
    Enclosure next = cv + st.dist[list.back()][j];
    used[j] = 1;
    list.push_back(j);
    exhaustive_dfs(st, list, used, next, max_len);
    list.pop_back();
    used[j] = 0;
  }
}

}  // namespace

VarSearchResult var_lower_bound(const SampledFunction& f, const VarOptions& opt) {
  const std::size_t m = f.domain.size();
  VfTable table = build_vf_table(f.domain);
  auto dist = distance_table(f);
  SearchState st{table, dist, {}};
  st.best.ratio = enc(rat(-1));  // any real list beats this sentinel

  // Exhaustive search over repeat-free lists when the space is small enough.
  std::size_t count = 0;
  bool feasible = true;
  {
    // sum over k of m * (m-1) * ... * (m-k+1)
    std::size_t term = 1;
    for (std::size_t k = 1; k <= std::min(opt.max_len, m) && feasible; ++k) {
      term *= (m - k + 1);
      count += term;
      if (count > opt.exhaustive_cap) feasible = false;
    }
  }
  if (feasible) {
    std::vector<std::size_t> list;
    std::vector<char> used(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      used[j] = 1;
      list.assign(1, j);
      exhaustive_dfs(st, list, used, enc(rat(0)), opt.max_len);
      used[j] = 0;
    }
    st.best.exhaustive = true;
  }

  // Beam search over lists that may revisit points.  Immediate repeats are
  // skipped: they contribute nothing to cvar and cannot lower vf.
  struct Cand {
    std::vector<std::size_t> list;
    Enclosure cv;
    Rat score;  // cv.hi / vf of the list
  };
  std::vector<Cand> beam;
  for (std::size_t j = 0; j < m; ++j) beam.push_back({{j}, enc(rat(0)), rat(0)});
  for (auto& c : beam) st.offer(c.list, c.cv);
  for (std::size_t len = 2; len <= opt.max_len; ++len) {
    std::vector<Cand> next;
    for (const auto& c : beam) {
      for (std::size_t j = 0; j < m; ++j) {
        if (j == c.list.back()) continue;
        Cand n;
        n.list = c.list;
        n.list.push_back(j);
        n.cv = c.cv + dist[c.list.back()][j];
        BestLabeling lb = vf_best(table, n.list);
        n.score = n.cv.hi / Rat(static_cast<long>(lb.value));
        Enclosure ratio = enc_div(n.cv, Rat(static_cast<long>(lb.value)));
        if (ratio.lo > st.best.ratio.lo ||
            (ratio.lo == st.best.ratio.lo && ratio.hi > st.best.ratio.hi)) {
          st.best.ratio = ratio;
          st.best.list = n.list;
          st.best.vf = lb.value;
        }
        next.push_back(std::move(n));
      }
    }
    std::sort(next.begin(), next.end(), [](const Cand& a, const Cand& b) {
      int c = cmp(a.score, b.score);
      if (c != 0) return c > 0;
      return a.list < b.list;
    });
    if (next.size() > opt.beam_width) next.resize(opt.beam_width);
    beam = std::move(next);
    if (beam.empty()) break;
  }

  if (sgn(st.best.ratio.lo) < 0) st.best.ratio = enc(rat(0));
  return st.best;
}

VarSearchResult var_exact_collinear(const SampledFunction& f) {
  if (!is_collinear_domain(f)) fail(Err::NotCollinear, "domain does not lie on one line");
  VarSearchResult r;
  r.exhaustive = true;
  if (f.domain.size() == 1) {
    r.list = {0};
    return r;
  }
  Line l = line_through(f.domain[0], f.domain[1]);
  Pt d = direction(l);
  std::vector<std::size_t> order(f.domain.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dot(d, f.domain[a]) < dot(d, f.domain[b]);
  });
  Enclosure total;
  for (std::size_t i = 1; i < order.size(); ++i)
    total = total + abs_enclosure(f.value[order[i]] - f.value[order[i - 1]]);
  r.ratio = total;
  r.list = order;
  r.vf = 1;
  return r;
}

NormReport bv_norm_estimate(const SampledFunction& f, const VarOptions& opt) {
  NormReport rep;
  rep.sup = sup_abs(f);
  if (is_collinear_domain(f)) {
    rep.search = var_exact_collinear(f);
    rep.var_exact = true;
  } else {
    rep.search = var_lower_bound(f, opt);
    rep.var_exact = false;
  }
  rep.var = rep.search.ratio;
  rep.norm = rep.sup + rep.var;
  return rep;
}

SampledFunction transfer(const SampledFunction& f, const std::function<Pt(const Pt&)>& h) {
  std::map<Pt, Cx, PtLess> image;
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    Pt q = h(f.domain[i]);
    auto it = image.find(q);
    if (it == image.end()) {
      image.emplace(q, f.value[i]);
    } else if (!(it->second == f.value[i])) {
      fail(Err::NotInjectiveOnDomain,
           "two domain points with different values map to " + pt_to_string(q));
    }
  }
  SampledFunction g;
  g.domain.reserve(image.size());
  g.value.reserve(image.size());
  for (auto& [p, v] : image) {
    g.domain.push_back(p);
    g.value.push_back(v);
  }
  return g;
}

}  // namespace acs
