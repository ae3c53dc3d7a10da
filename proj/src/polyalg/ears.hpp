#pragma once

#include <array>
#include <optional>
#include <vector>

#include "geom/polygon.hpp"

namespace acs {

// Vertex i is an ear when the polygon turns strictly left there and the open
// diagonal between its neighbors runs through the interior.  Every vertex of
// a triangle counts as an ear; every simple polygon with more than three
// vertices has at least two.
bool is_ear(const Polygon& p, std::size_t i);
std::vector<std::size_t> find_ears(const Polygon& p);

// Deterministic triangulation by repeatedly clipping the lowest-index ear.
// Accepts rings with straight vertices (see raw_ring).
std::vector<std::array<Pt, 3>> triangulate(const Polygon& p);

// Clipping an ear replaces its two edges by the diagonal; when the ring has
// a collinear triple (prev(a), a, b) or (a, b, next(b)) around the ear, a
// neighbor straightens and canonicalization drops it too, so the clip
// removes more than one vertex.  True when both neighbors keep a strict
// turn.  A quadrilateral's ear always clips cleanly: its other two edges
// collinear with the diagonal would already make a straight vertex.
bool clip_keeps_corners(const Polygon& p, std::size_t ear);

// Convex quadrilateral certifying that an ear vertex can be pushed onto the
// midpoint of its diagonal by a map supported inside the quadrilateral:
//   - ring (a, w, b, u) up to orientation, with w inside the polygon and u
//     outside, the ear vertex v strictly inside, and m = midpoint(a, b)
//     strictly inside;
//   - the two ear edges stay inside the quadrilateral, every other polygon
//     edge and vertex stays out (touching only at a and b);
//   - optional obstacle polygons stay disjoint from it and an optional outer
//     bound strictly contains it.
struct EarQuad {
  Polygon quad;
  std::size_t ear = 0;
  Pt a, v, b;  // previous neighbor, ear vertex, next neighbor
  Pt m;        // midpoint of (a, b); the relocation target
  Pt w, u;     // inner and outer off-diagonal corners
};

EarQuad construct_ear_quadrilateral(const Polygon& p, std::size_t ear,
                                    const std::vector<Polygon>& obstacles = {},
                                    const std::optional<Polygon>& bound = std::nullopt);

}  // namespace acs
