#pragma once

#include "geom/core.hpp"

#include <array>
#include <vector>

namespace acs {

// Simple polygon, stored validated and canonical: counterclockwise, starting
// at the lexicographically smallest vertex, no repeated vertices, no three
// consecutive vertices collinear, no edge crossings.
struct Polygon {
  std::vector<Pt> v;
  bool operator==(const Polygon&) const = default;
  std::size_t size() const { return v.size(); }
  const Pt& at(std::size_t i) const { return v[i % v.size()]; }
};

Polygon make_polygon(std::vector<Pt> ring);
// Relaxed entry point for traversal output: drops repeated and collinear
// intermediate vertices first, then validates.
Polygon polygon_from_traversal(std::vector<Pt> ring);

Rat area2(const std::vector<Pt>& ring);  // signed, twice the area
bool is_convex(const Polygon& p);
Seg edge(const Polygon& p, std::size_t i);

enum class Where { Inside, Boundary, Outside };
Where locate(const Polygon& p, const Pt& q);

// Open-segment classification against the polygon boundary.  A and B may lie
// on the boundary; the open segment between them must not meet any edge.
bool open_seg_avoids_boundary(const Polygon& p, const Pt& A, const Pt& B);
bool open_seg_in_interior(const Polygon& p, const Pt& A, const Pt& B);
bool open_seg_in_exterior(const Polygon& p, const Pt& A, const Pt& B);

bool boundaries_disjoint(const Polygon& p, const Polygon& q);
bool disjoint_closed(const Polygon& p, const Polygon& q);
// closure(inner) contained in the open interior of outer
bool inside_strict(const Polygon& inner, const Polygon& outer);

struct Rectangle {
  Polygon p;  // exactly 4 vertices, right angles
  Pt center;
  bool operator==(const Rectangle&) const = default;
};

Rectangle make_rectangle(std::vector<Pt> corners);
Rectangle rectangle_from_frame(const Pt& center, const Pt& u, const Pt& v,
                               const Rat& ulo, const Rat& uhi, const Rat& vlo, const Rat& vhi);
// Corner points pulled toward the center: corner + lambda*(center - corner),
// lambda rational in (0,1); order matches the polygon's vertices.
std::array<Pt, 4> eps_corners(const Rectangle& r, const Rat& lambda);

Polygon triangle(const Pt& a, const Pt& b, const Pt& c);

// Counter-clockwise ring accepted without the usual validation; straight
// (collinear) vertices are kept.  For internal algorithms that must track
// rings through stages where extra vertices appear on edges.
Polygon raw_ring(std::vector<Pt> ring);

// Part of the polygon on one side of a line: keep = +1 keeps side >= 0,
// keep = -1 keeps side <= 0.  The result is cleaned up; cutting everything
// (or leaving less than a triangle) is an error.
Polygon clip_halfplane(const Polygon& p, const Line& l, int keep);

}  // namespace acs
