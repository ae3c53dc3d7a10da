#pragma once

#include <variant>
#include <vector>

#include "geom/polygon.hpp"

namespace acs {

// ---------------------------------------------------------------------------
// Half-plane-affine map: two nonsingular affine maps glued along a line.
// h1 acts where side(boundary, p) >= 0, h2 where side(boundary, p) <= 0;
// they agree on the line itself.  The map is a plane homeomorphism exactly
// when the two open half-plane images lie on opposite sides of the image of
// the boundary line.
// ---------------------------------------------------------------------------

struct HpaMap {
  Line boundary;
  Affine h1;
  Affine h2;
  Line image_boundary;
  bool operator==(const HpaMap&) const = default;
};

HpaMap make_hpa(const Line& boundary, const Affine& h1, const Affine& h2);
Pt apply(const HpaMap& m, const Pt& p);
HpaMap inverse(const HpaMap& m);

// ---------------------------------------------------------------------------
// Locally piecewise affine map: equal to a global nonsingular affine map
// alpha outside a convex polygon C; inside, C is fanned into triangles
// (x0, v_j, v_{j+1}) and each cell carries the affine map with
// v_j -> alpha(v_j), v_{j+1} -> alpha(v_{j+1}), x0 -> y0.  Cell maps agree
// with alpha on the boundary of C and with each other on shared spokes, so
// the whole is a plane homeomorphism when y0 lies inside alpha(C).
// ---------------------------------------------------------------------------

struct LpaMap {
  Polygon domain;            // convex
  Affine alpha;
  Pt x0, y0;
  std::vector<Affine> cell;  // cell j covers triangle (x0, v_j, v_{j+1})
  bool operator==(const LpaMap&) const = default;
};

LpaMap make_lpa(const Polygon& C, const Affine& alpha, const Pt& x0, const Pt& y0);
Pt apply(const LpaMap& m, const Pt& p);
LpaMap inverse(const LpaMap& m);
Polygon image_polygon(const LpaMap& m);  // alpha(C)

// ---------------------------------------------------------------------------
// Composition chains.
// ---------------------------------------------------------------------------

using Step = std::variant<Affine, HpaMap, LpaMap>;

Pt apply(const Step& s, const Pt& p);
Step inverse(const Step& s);

struct Chain {
  std::vector<Step> steps;  // applied left to right
  bool operator==(const Chain&) const = default;
};

Pt apply(const Chain& c, const Pt& p);
Chain inverse(const Chain& c);
Chain concat(const Chain& first, const Chain& then);

// Image of a polygon under a step or chain.  Edges are subdivided at every
// meeting point with the step's affinity breaks (the boundary line of a
// half-plane map; the fan spokes and domain edges of a locally piecewise
// affine map), so each sub-edge maps affinely; straightened vertices are
// dropped again by polygon cleanup.
Polygon map_polygon(const Step& s, const Polygon& p);
Polygon map_polygon(const Chain& c, const Polygon& p);

}  // namespace acs
