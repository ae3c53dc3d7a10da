#pragma once

#include <vector>

#include "polyalg/reduce.hpp"

namespace acs {

// Polygon with pairwise disjoint windows strictly inside it; the genus is
// the number of windows.  Windows are kept sorted by their canonical first
// vertex, so equality of regions is structural.
struct GenusRegion {
  Polygon outer;
  std::vector<Polygon> windows;
  std::size_t genus() const { return windows.size(); }
  bool operator==(const GenusRegion&) const = default;
};

GenusRegion make_genus_region(Polygon outer, std::vector<Polygon> windows);

// The reference region of genus n: outer triangle (0,-1),(1,0),(0,1) with n
// standard triangular windows in a row along the base segment.
GenusRegion standard_tau(std::size_t n);

// Image of a region under a step or chain; the result is revalidated.
GenusRegion map_region(const Step& s, const GenusRegion& g);
GenusRegion map_region(const Chain& c, const GenusRegion& g);

struct RegionCertificate {
  Chain chain;
  std::vector<GenusRegion> snapshots;  // input first, then one per chain step
};

// Deterministic normalization of a genus-n region onto standard_tau(n).
// Reduces the outer polygon to a triangle with the windows untouched, maps
// it affinely onto the standard triangle, reduces each window to a triangle
// avoiding the others, then separates, parks, and relocates the windows into
// their standard slots through exactly-checked free rectangles.  Every step
// keeps the region valid, so the genus is preserved in every snapshot.
RegionCertificate normalize_genus_region(const GenusRegion& g);

}  // namespace acs
