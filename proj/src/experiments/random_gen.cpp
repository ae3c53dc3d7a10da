#include "experiments/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace acs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Direction order: upper half-plane first (positive x-axis included), then by
// counterclockwise angle within a half.  Total on distinct directions.
bool dir_less(const Pt& a, const Pt& b) {
  auto half = [](const Pt& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

bool same_direction(const Pt& a, const Pt& b) {
  return sgn(cross(a, b)) == 0 && sgn(dot(a, b)) > 0;
}

template <typename T>
void fisher_yates(Rng& g, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rnd_long(g, 0, static_cast<long>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index + 0x51ED2700)));
}

long rnd_long(Rng& g, long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
  std::uint64_t r;
  do {
    r = g();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rat random_rat(Rng& g, long lo, long hi, long max_den) {
  long den = rnd_long(g, 1, max_den);
  long num = rnd_long(g, lo * den, hi * den);
  return rat(num, den);
}

Pt random_point(Rng& g, long lo, long hi, long max_den) {
  Rat x = random_rat(g, lo, hi, max_den);
  Rat y = random_rat(g, lo, hi, max_den);
  return Pt{x, y};
}

std::vector<Pt> random_list(Rng& g, std::size_t min_len, std::size_t max_len) {
  std::size_t n = static_cast<std::size_t>(rnd_long(g, static_cast<long>(min_len), static_cast<long>(max_len)));
  std::vector<Pt> out;
  std::set<Pt, PtLess> seen;
  while (out.size() < n) {
    Pt p = random_point(g, -8, 8, 6);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

Polygon random_simple_polygon(Rng& g, std::size_t n) {
  for (;;) {
    std::vector<Pt> pts;
    std::set<Pt, PtLess> seen;
    while (pts.size() < n) {
      Pt p = random_point(g, -8, 8, 4);
      if (seen.insert(p).second) pts.push_back(p);
    }
    Pt c{0, 0};
    for (const Pt& p : pts) c = c + p;
    c = scale(rat(1, static_cast<long>(n)), c);
    bool bad = false;
    std::vector<Pt> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = pts[i] - c;
      if (sgn(d[i].x) == 0 && sgn(d[i].y) == 0) bad = true;
    }
    if (bad) continue;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return dir_less(d[a], d[b]); });
    for (std::size_t i = 0; i + 1 < n && !bad; ++i)
      if (same_direction(d[idx[i]], d[idx[i + 1]])) bad = true;
    if (bad) continue;
    std::vector<Pt> ring;
    for (std::size_t i : idx) ring.push_back(pts[i]);
    try {
      Polygon p = make_polygon(ring);
      if (p.size() == n) return p;
    } catch (const Error&) {
    }
  }
}

Polygon random_convex_polygon(Rng& g, std::size_t n) {
  for (;;) {
    // Valtr-style edge vectors: split sorted coordinates into two chains so
    // the per-axis deltas sum to zero, then pair the axes at random.
    auto deltas = [&](void) {
      std::vector<long> xs(n);
      for (long& v : xs) v = rnd_long(g, -24, 24);
      std::sort(xs.begin(), xs.end());
      std::vector<long> out;
      long up = xs.front(), down = xs.front();
      for (std::size_t i = 1; i + 1 < n; ++i) {
        if (rnd_long(g, 0, 1) == 0) {
          out.push_back(xs[i] - up);
          up = xs[i];
        } else {
          out.push_back(down - xs[i]);
          down = xs[i];
        }
      }
      out.push_back(xs.back() - up);
      out.push_back(down - xs.back());
      return out;
    };
    std::vector<long> dx = deltas();
    std::vector<long> dy = deltas();
    fisher_yates(g, dy);
    std::vector<Pt> e(n);
    bool bad = false;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = Pt{rat(dx[i]), rat(dy[i])};
      if (sgn(e[i].x) == 0 && sgn(e[i].y) == 0) bad = true;
    }
    if (bad) continue;
    std::sort(e.begin(), e.end(), dir_less);
    for (std::size_t i = 0; i + 1 < n && !bad; ++i)
      if (same_direction(e[i], e[i + 1])) bad = true;
    if (bad) continue;
    std::vector<Pt> ring;
    Pt at{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      ring.push_back(at);
      at = at + e[i];
    }
    try {
      Polygon p = make_polygon(ring);
      if (p.size() == n && is_convex(p)) return p;
    } catch (const Error&) {
    }
  }
}

Affine random_affine(Rng& g) {
  for (;;) {
    Affine f{random_rat(g, -3, 3, 3), random_rat(g, -3, 3, 3),
             random_rat(g, -3, 3, 3), random_rat(g, -3, 3, 3),
             random_rat(g, -5, 5, 3), random_rat(g, -5, 5, 3)};
    if (sgn(det(f)) != 0) return f;
  }
}

HpaMap random_hpa(Rng& g) {
  for (;;) {
    Pt p = random_point(g, -6, 6, 3);
    Pt q = random_point(g, -6, 6, 3);
    if (p == q) continue;
    return random_hpa_on_line(g, line_through(p, q));
  }
}

HpaMap random_hpa_on_line(Rng& g, const Line& boundary) {
  Rat a = rat_of(boundary.a, 1), b = rat_of(boundary.b, 1), c = rat_of(boundary.c, 1);
  for (;;) {
    Affine h1 = random_affine(g);
    Pt v = random_point(g, -2, 2, 3);
    Affine h2{h1.m11 + v.x * a, h1.m12 + v.x * b,
              h1.m21 + v.y * a, h1.m22 + v.y * b,
              h1.t1 + v.x * c, h1.t2 + v.y * c};
    if (sgn(det(h2)) != sgn(det(h1))) continue;
    try {
      return make_hpa(boundary, h1, h2);
    } catch (const Error&) {
    }
  }
}

LpaMap random_lpa(Rng& g, std::size_t n) {
  for (;;) {
    Polygon C = random_convex_polygon(g, n);
    Affine alpha = random_affine(g);
    auto interior = [&](const std::vector<Pt>& verts) {
      Rat wsum{0};
      Pt acc{0, 0};
      for (const Pt& v : verts) {
        Rat w = rat(rnd_long(g, 1, 8));
        acc = acc + scale(w, v);
        wsum += w;
      }
      return scale(1 / wsum, acc);
    };
    Pt x0 = interior(C.v);
    std::vector<Pt> image;
    for (const Pt& v : C.v) image.push_back(apply(alpha, v));
    Pt y0 = interior(image);
    try {
      return make_lpa(C, alpha, x0, y0);
    } catch (const Error&) {
    }
  }
}

}  // namespace acs
