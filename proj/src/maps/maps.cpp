#include "maps/maps.hpp"

#include <algorithm>

namespace acs {

namespace {

// A point strictly on the positive side of l: any point of l plus the left
// normal (a, b).
Pt left_test_point(const Line& l) {
  Pt p = point_on(l);
  return Pt{p.x + rat_of(l.a, Int(1)), p.y + rat_of(l.b, Int(1))};
}

Pt right_test_point(const Line& l) {
  Pt p = point_on(l);
  return Pt{p.x - rat_of(l.a, Int(1)), p.y - rat_of(l.b, Int(1))};
}

}  // namespace

HpaMap make_hpa(const Line& boundary, const Affine& h1, const Affine& h2) {
  if (sgn(det(h1)) == 0 || sgn(det(h2)) == 0)
    fail(Err::SingularAffine, "half-plane map with a singular piece");
  Pt p = point_on(boundary);
  Pt q = second_point_on(boundary);
  if (!(apply(h1, p) == apply(h2, p)) || !(apply(h1, q) == apply(h2, q)))
    fail(Err::BoundaryMismatch, "pieces disagree on the boundary line");
  HpaMap m;
  m.boundary = boundary;
  m.h1 = h1;
  m.h2 = h2;
  m.image_boundary = line_through(apply(h1, p), apply(h1, q));
  int s1 = side(m.image_boundary, apply(h1, left_test_point(boundary)));
  int s2 = side(m.image_boundary, apply(h2, right_test_point(boundary)));
  if (s1 == 0 || s2 == 0 || s1 == s2)
    fail(Err::NotInjective, "half-plane images overlap");
  return m;
}

Pt apply(const HpaMap& m, const Pt& p) {
  return side(m.boundary, p) >= 0 ? apply(m.h1, p) : apply(m.h2, p);
}

HpaMap inverse(const HpaMap& m) {
  int s1 = side(m.image_boundary, apply(m.h1, left_test_point(m.boundary)));
  // the piece whose image covers the positive side of the image line becomes
  // the positive-side piece of the inverse
  const Affine& pos = s1 > 0 ? m.h1 : m.h2;
  const Affine& neg = s1 > 0 ? m.h2 : m.h1;
  return make_hpa(m.image_boundary, inverse(pos), inverse(neg));
}

LpaMap make_lpa(const Polygon& C, const Affine& alpha, const Pt& x0, const Pt& y0) {
  if (!is_convex(C)) fail(Err::NotConvex, "locally piecewise affine domain must be convex");
  if (sgn(det(alpha)) == 0) fail(Err::SingularAffine, "global affine part is singular");
  if (locate(C, x0) != Where::Inside)
    fail(Err::ApexOutside, "anchor is not strictly inside the domain");
  std::vector<Pt> image_ring;
  image_ring.reserve(C.size());
  for (const Pt& v : C.v) image_ring.push_back(apply(alpha, v));
  Polygon image = make_polygon(image_ring);
  if (locate(image, y0) != Where::Inside)
    fail(Err::ApexOutside, "anchor image is not strictly inside the image polygon");
  LpaMap m;
  m.domain = C;
  m.alpha = alpha;
  m.x0 = x0;
  m.y0 = y0;
  m.cell.reserve(C.size());
  for (std::size_t j = 0; j < C.size(); ++j) {
    std::array<Pt, 3> src = {x0, C.at(j), C.at(j + 1)};
    std::array<Pt, 3> dst = {y0, apply(alpha, C.at(j)), apply(alpha, C.at(j + 1))};
    m.cell.push_back(affine_from_triangles(src, dst));
  }
  return m;
}

Pt apply(const LpaMap& m, const Pt& p) {
  if (locate(m.domain, p) == Where::Outside) return apply(m.alpha, p);
  for (std::size_t j = 0; j < m.domain.size(); ++j) {
    const Pt& a = m.domain.at(j);
    const Pt& b = m.domain.at(j + 1);
    if (orient(m.x0, a, p) >= 0 && orient(a, b, p) >= 0 && orient(b, m.x0, p) >= 0)
      return apply(m.cell[j], p);
  }
  fail(Err::Internal, "point inside the domain missed every fan cell");
}

Polygon image_polygon(const LpaMap& m) {
  std::vector<Pt> ring;
  ring.reserve(m.domain.size());
  for (const Pt& v : m.domain.v) ring.push_back(apply(m.alpha, v));
  return make_polygon(ring);
}

LpaMap inverse(const LpaMap& m) {
  return make_lpa(image_polygon(m), inverse(m.alpha), m.y0, m.x0);
}

Pt apply(const Step& s, const Pt& p) {
  return std::visit([&](const auto& m) { return apply(m, p); }, s);
}

Step inverse(const Step& s) {
  return std::visit([](const auto& m) -> Step { return inverse(m); }, s);
}

Pt apply(const Chain& c, const Pt& p) {
  Pt q = p;
  for (const Step& s : c.steps) q = acs::apply(s, q);
  return q;
}

Chain inverse(const Chain& c) {
  Chain r;
  r.steps.reserve(c.steps.size());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) r.steps.push_back(inverse(*it));
  return r;
}

Chain concat(const Chain& first, const Chain& then) {
  Chain r = first;
  r.steps.insert(r.steps.end(), then.steps.begin(), then.steps.end());
  return r;
}

namespace {

// Segments along which a locally piecewise affine step stops being a single
// affine map: the fan spokes and the domain edges.
std::vector<Seg> break_segments(const LpaMap& m) {
  std::vector<Seg> out;
  for (std::size_t j = 0; j < m.domain.size(); ++j) {
    out.push_back(Seg{m.x0, m.domain.at(j)});
    out.push_back(Seg{m.domain.at(j), m.domain.at(j + 1)});
  }
  return out;
}

}  // namespace

Polygon map_polygon(const Step& s, const Polygon& p) {
  if (std::holds_alternative<Affine>(s)) {
    std::vector<Pt> ring;
    ring.reserve(p.size());
    for (const Pt& v : p.v) ring.push_back(apply(std::get<Affine>(s), v));
    return make_polygon(ring);
  }
  std::vector<Pt> traversal;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Pt a = p.at(i);
    Pt b = p.at(i + 1);
    Pt d = b - a;
    std::vector<std::pair<Rat, Pt>> cuts;
    if (std::holds_alternative<HpaMap>(s)) {
      // an edge needs a cut only where it crosses the boundary line strictly;
      // edges touching or lying on the line stay in one closed half-plane
      Rat t;
      if (crosses_line(Seg{a, b}, std::get<HpaMap>(s).boundary, &t))
        cuts.emplace_back(t, Pt{a.x + t * d.x, a.y + t * d.y});
    } else {
      for (const Seg& br : break_segments(std::get<LpaMap>(s))) {
        Hit h = seg_intersect(Seg{a, b}, br);
        if (h.kind == HitKind::Point) {
          cuts.emplace_back(dot(d, h.p - a), h.p);
        } else if (h.kind == HitKind::Overlap) {
          // overlap endpoints lie on the edge; both are safe cut points
          for (const Pt& q : {br.a, br.b})
            if (on_segment(q, Seg{a, b})) cuts.emplace_back(dot(d, q - a), q);
        }
      }
      std::sort(cuts.begin(), cuts.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    traversal.push_back(acs::apply(s, a));
    for (const auto& [t, q] : cuts) {
      (void)t;
      if (!(q == a) && !(q == b)) traversal.push_back(acs::apply(s, q));
    }
  }
  return polygon_from_traversal(traversal);
}

Polygon map_polygon(const Chain& c, const Polygon& p) {
  Polygon q = p;
  for (const Step& s : c.steps) q = map_polygon(s, q);
  return q;
}

}  // namespace acs
