#include "geom/polygon.hpp"

#include <algorithm>

namespace acs {

Rat area2(const std::vector<Pt>& ring) {
  Rat s(0);
  std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& a = ring[i];
    const Pt& b = ring[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

Polygon make_polygon(std::vector<Pt> ring) {
  if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
  std::size_t n = ring.size();
  if (n < 3) fail(Err::Degenerate, "polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ring[i] == ring[j])
        fail(Err::Degenerate, "repeated polygon vertex " + pt_to_string(ring[i]));
  for (std::size_t i = 0; i < n; ++i)
    if (collinear(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]))
      fail(Err::Degenerate, "collinear vertex run at " + pt_to_string(ring[(i + 1) % n]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      Seg a{ring[i], ring[(i + 1) % n]}, b{ring[j], ring[(j + 1) % n]};
      if (seg_intersect(a, b).kind != HitKind::Disjoint)
        fail(Err::SelfIntersecting, "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                        " of the polygon intersect");
    }
  }
  Rat a2 = area2(ring);
  if (sgn(a2) == 0) fail(Err::Degenerate, "polygon with zero area");
  if (sgn(a2) < 0) std::reverse(ring.begin(), ring.end());
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (lex_less(ring[i], ring[start])) start = i;
  std::rotate(ring.begin(), ring.begin() + static_cast<long>(start), ring.end());
  return Polygon{std::move(ring)};
}

Polygon polygon_from_traversal(std::vector<Pt> ring) {
  if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
  // Remove consecutive duplicates, then straight-through vertices, until stable.
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    std::vector<Pt> out;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Pt& prev = ring[(i + n - 1) % n];
      const Pt& cur = ring[i];
      const Pt& next = ring[(i + 1) % n];
      if (cur == next) {
        changed = true;
        continue;
      }
      if (cur != prev && collinear(prev, cur, next)) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    ring = std::move(out);
  }
  return make_polygon(std::move(ring));
}

bool is_convex(const Polygon& p) {
  std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    if (orient(p.at(i), p.at(i + 1), p.at(i + 2)) <= 0) return false;
  return true;
}

Seg edge(const Polygon& p, std::size_t i) { return {p.at(i), p.at(i + 1)}; }

Where locate(const Polygon& p, const Pt& q) {
  std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    if (on_segment(q, edge(p, i))) return Where::Boundary;
  bool in = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& a = p.at(i);
    const Pt& b = p.at(i + 1);
    if ((a.y > q.y) != (b.y > q.y)) {
      int o = orient(a, b, q);
      if (b.y > a.y ? o > 0 : o < 0) in = !in;
    }
  }
  return in ? Where::Inside : Where::Outside;
}

bool open_seg_avoids_boundary(const Polygon& p, const Pt& A, const Pt& B) {
  Seg s{A, B};
  for (std::size_t i = 0; i < p.size(); ++i) {
    Hit h = seg_intersect(s, edge(p, i));
    if (h.kind == HitKind::Overlap) return false;
    if (h.kind == HitKind::Point && !(h.p == A) && !(h.p == B)) return false;
  }
  return true;
}

bool open_seg_in_interior(const Polygon& p, const Pt& A, const Pt& B) {
  if (A == B) fail(Err::Degenerate, "open segment with coincident endpoints");
  return open_seg_avoids_boundary(p, A, B) && locate(p, midpoint(A, B)) == Where::Inside;
}

bool open_seg_in_exterior(const Polygon& p, const Pt& A, const Pt& B) {
  if (A == B) fail(Err::Degenerate, "open segment with coincident endpoints");
  return open_seg_avoids_boundary(p, A, B) && locate(p, midpoint(A, B)) == Where::Outside;
}

bool boundaries_disjoint(const Polygon& p, const Polygon& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (seg_intersect(edge(p, i), edge(q, j)).kind != HitKind::Disjoint) return false;
  return true;
}

bool disjoint_closed(const Polygon& p, const Polygon& q) {
  return boundaries_disjoint(p, q) && locate(p, q.v[0]) == Where::Outside &&
         locate(q, p.v[0]) == Where::Outside;
}

bool inside_strict(const Polygon& inner, const Polygon& outer) {
  if (!boundaries_disjoint(inner, outer)) return false;
  for (const Pt& v : inner.v)
    if (locate(outer, v) != Where::Inside) return false;
  return true;
}

Rectangle make_rectangle(std::vector<Pt> corners) {
  Polygon p = make_polygon(std::move(corners));
  if (p.size() != 4) fail(Err::NotRectangle, "rectangle needs exactly 4 corners");
  Pt e0 = p.v[1] - p.v[0], e1 = p.v[2] - p.v[1], e2 = p.v[3] - p.v[2], e3 = p.v[0] - p.v[3];
  if (!(e0 == scale(Rat(-1), e2)) || !(e1 == scale(Rat(-1), e3)))
    fail(Err::NotRectangle, "opposite sides are not parallel translates");
  if (sgn(dot(e0, e1)) != 0) fail(Err::NotRectangle, "adjacent sides are not perpendicular");
  Pt c = midpoint(p.v[0], p.v[2]);
  return Rectangle{std::move(p), c};
}

Rectangle rectangle_from_frame(const Pt& origin, const Pt& u, const Pt& v, const Rat& ulo,
                               const Rat& uhi, const Rat& vlo, const Rat& vhi) {
  if (sgn(dot(u, v)) != 0) fail(Err::NotRectangle, "frame axes are not perpendicular");
  std::vector<Pt> ring = {
      origin + scale(ulo, u) + scale(vlo, v), origin + scale(uhi, u) + scale(vlo, v),
      origin + scale(uhi, u) + scale(vhi, v), origin + scale(ulo, u) + scale(vhi, v)};
  return make_rectangle(std::move(ring));
}

std::array<Pt, 4> eps_corners(const Rectangle& r, const Rat& lambda) {
  if (sgn(lambda) <= 0 || lambda >= 1)
    fail(Err::EpsilonTooLarge, "corner parameter must lie strictly between 0 and 1");
  std::array<Pt, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = r.p.v[i] + scale(lambda, r.center - r.p.v[i]);
  return out;
}

Polygon triangle(const Pt& a, const Pt& b, const Pt& c) { return make_polygon({a, b, c}); }

Polygon raw_ring(std::vector<Pt> ring) {
  if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
  if (ring.size() < 3) fail(Err::Degenerate, "ring needs at least three vertices");
  Rat a2 = area2(ring);
  if (sgn(a2) == 0) fail(Err::Degenerate, "ring encloses no area");
  if (sgn(a2) < 0) std::reverse(ring.begin(), ring.end());
  Polygon p;
  p.v = std::move(ring);
  return p;
}

Polygon clip_halfplane(const Polygon& p, const Line& l, int keep) {
  if (keep != 1 && keep != -1) fail(Err::Degenerate, "keep side must be +1 or -1");
  std::vector<Pt> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Pt& a = p.at(i);
    const Pt& b = p.at(i + 1);
    int sa = side(l, a) * keep;
    int sb = side(l, b) * keep;
    if (sa >= 0) out.push_back(a);
    if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0))
      out.push_back(line_meet(l, line_through(a, b)));
  }
  return polygon_from_traversal(out);
}

}  // namespace acs
