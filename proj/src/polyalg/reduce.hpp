#pragma once

#include <optional>
#include <vector>

#include "maps/maps.hpp"
#include "polyalg/ears.hpp"

namespace acs {

// A reduction (or relocation) result: the composed plane map together with
// the polygon after every step.  snapshots[0] is the input; each later entry
// is the image of its predecessor under the corresponding chain step.
struct Certificate {
  Chain chain;
  std::vector<Polygon> snapshots;
};

// Flatten a polygon to a triangle by repeatedly pushing the lowest-index ear
// vertex onto the midpoint of its diagonal.  Each step removes exactly one
// vertex, so an n-gon takes n-3 steps.  Obstacle polygons stay untouched by
// every step's support; with a bound, every support stays strictly inside it.
Certificate reduce_polygon_to_triangle(const Polygon& p,
                                       const std::vector<Polygon>& obstacles = {},
                                       const std::optional<Polygon>& bound = std::nullopt);

// Move vertex X of triangle (Y, Z, X) to Xhat while fixing the side (Y, Z)
// pointwise.  The support is a quadrilateral capping the triangle just
// beyond X, shrunk until it clears all obstacles and fits inside the bound;
// Xhat must lie inside the triangle or on one of the half-open edges (Y, X],
// (Z, X] so that every shrink level contains it.
LpaMap cap_vertex_move(const Pt& Y, const Pt& Z, const Pt& X, const Pt& Xhat,
                       const std::vector<Polygon>& obstacles = {},
                       const std::optional<Polygon>& bound = std::nullopt);

// Chain of maps, each supported strictly inside the rectangle, sending one
// strictly interior triangle onto another.  Everything on or outside the
// rectangle's boundary is fixed pointwise.  Triangles touching the boundary
// are rejected.  Snapshots track the moving triangle after every step.
Certificate move_triangle_in_rectangle(const Polygon& t_from, const Polygon& t_to,
                                       const Rectangle& r);

}  // namespace acs
