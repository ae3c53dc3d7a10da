#include "polyalg/ears.hpp"

#include <algorithm>

namespace acs {

bool is_ear(const Polygon& p, std::size_t i) {
  const std::size_t n = p.size();
  if (i >= n) fail(Err::Degenerate, "ear index out of range");
  if (n == 3) return true;
  const Pt& a = p.at(i + n - 1);
  const Pt& v = p.at(i);
  const Pt& b = p.at(i + 1);
  if (orient(a, v, b) <= 0) return false;
  return open_seg_in_interior(p, a, b);
}

std::vector<std::size_t> find_ears(const Polygon& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (is_ear(p, i)) out.push_back(i);
  return out;
}

std::vector<std::array<Pt, 3>> triangulate(const Polygon& p) {
  std::vector<std::array<Pt, 3>> tris;
  Polygon cur = p;
  while (cur.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!is_ear(cur, i)) continue;
      const std::size_t n = cur.size();
      tris.push_back({cur.at(i + n - 1), cur.at(i), cur.at(i + 1)});
      std::vector<Pt> ring;
      ring.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) ring.push_back(cur.v[k]);
      cur = raw_ring(std::move(ring));
      clipped = true;
      break;
    }
    if (!clipped) fail(Err::Internal, "simple ring without an ear");
  }
  tris.push_back({cur.v[0], cur.v[1], cur.v[2]});
  return tris;
}

namespace {

// All validity conditions for a candidate ear quadrilateral; the constructor
// shrinks the free corners until these hold, which the geometry guarantees
// happens after finitely many halvings.
bool quad_valid(const Polygon& p, std::size_t i, const Polygon& quad, const Pt& a, const Pt& v,
                const Pt& b, const Pt& m, const std::vector<Polygon>& obstacles,
                const std::optional<Polygon>& bound) {
  if (quad.size() != 4 || !is_convex(quad)) return false;
  if (locate(quad, v) != Where::Inside) return false;
  if (locate(quad, m) != Where::Inside) return false;
  // the ear edges must stay inside the quadrilateral
  if (!open_seg_avoids_boundary(quad, a, v)) return false;
  if (!open_seg_avoids_boundary(quad, b, v)) return false;
  if (locate(quad, a) != Where::Boundary || locate(quad, b) != Where::Boundary) return false;
  // no other polygon vertex may enter the closed quadrilateral
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (p.v[k] == a || p.v[k] == b || p.v[k] == v) continue;
    if (locate(quad, p.v[k]) != Where::Outside) return false;
  }
  // no edge other than the two ear edges may meet it except at a or b
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t prev = (i + n - 1) % n;
    if (k == prev || k == i) continue;  // the ear edges (a,v) and (v,b)
    Seg e = edge(p, k);
    for (std::size_t q = 0; q < quad.size(); ++q) {
      Hit h = seg_intersect(e, edge(quad, q));
      if (h.kind == HitKind::Overlap) return false;
      if (h.kind == HitKind::Point && !(h.p == a) && !(h.p == b)) return false;
    }
  }
  for (const Polygon& o : obstacles)
    if (!disjoint_closed(quad, o)) return false;
  if (bound && !inside_strict(quad, *bound)) return false;
  return true;
}

}  // namespace

EarQuad construct_ear_quadrilateral(const Polygon& p, std::size_t ear,
                                    const std::vector<Polygon>& obstacles,
                                    const std::optional<Polygon>& bound) {
  if (p.size() < 4) fail(Err::Degenerate, "ear quadrilateral needs a polygon beyond a triangle");
  if (!is_ear(p, ear)) fail(Err::Degenerate, "vertex is not an ear");
  const std::size_t n = p.size();
  const Pt a = p.at(ear + n - 1);
  const Pt v = p.at(ear);
  const Pt b = p.at(ear + 1);
  const Pt m = midpoint(a, b);

  // triangle of the clipped polygon sitting on the diagonal (a, b); the inner
  // corner w lives strictly inside it
  std::vector<Pt> ring;
  ring.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    if (k != ear) ring.push_back(p.v[k]);
  Polygon clipped = raw_ring(std::move(ring));
  std::optional<Polygon> t1;
  for (const auto& t : triangulate(clipped)) {
    bool has_a = t[0] == a || t[1] == a || t[2] == a;
    bool has_b = t[0] == b || t[1] == b || t[2] == b;
    if (has_a && has_b) {
      t1 = triangle(t[0], t[1], t[2]);
      break;
    }
  }
  if (!t1) fail(Err::Internal, "no triangulation triangle sits on the ear diagonal");

  Rat tw(1, 2);
  for (int wi = 0; wi < 80; ++wi, tw /= 2) {
    Pt w = m + scale(tw, m - v);
    if (locate(*t1, w) != Where::Inside) continue;
    Rat tu(1, 2);
    for (int ui = 0; ui < 80; ++ui, tu /= 2) {
      Pt u = v + scale(tu, v - w);
      Polygon quad;
      try {
        quad = make_polygon({a, w, b, u});
      } catch (const Error&) {
        continue;  // degenerate or self-crossing candidate; shrink further
      }
      if (!quad_valid(p, ear, quad, a, v, b, m, obstacles, bound)) continue;
      if (!open_seg_in_interior(p, a, w) || !open_seg_in_interior(p, b, w)) continue;
      if (!open_seg_in_exterior(p, a, u) || !open_seg_in_exterior(p, b, u)) continue;
      EarQuad out;
      out.quad = quad;
      out.ear = ear;
      out.a = a;
      out.v = v;
      out.b = b;
      out.m = m;
      out.w = w;
      out.u = u;
      return out;
    }
  }
  fail(Err::Internal, "ear quadrilateral construction did not converge");
}

bool clip_keeps_corners(const Polygon& p, std::size_t ear) {
  std::size_t m = p.size();
  if (m <= 4) return true;
  const Pt& a2 = p.at((ear + m - 2) % m);
  const Pt& a = p.at((ear + m - 1) % m);
  const Pt& b = p.at((ear + 1) % m);
  const Pt& b2 = p.at((ear + 2) % m);
  return orient(a2, a, b) != 0 && orient(a, b, b2) != 0;
}

}  // namespace acs
