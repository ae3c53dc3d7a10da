#pragma once

#include <map>
#include <string>
#include <vector>

#include "maps/maps.hpp"
#include "polyalg/genus.hpp"
#include "variation/variation.hpp"

namespace acs {

// On-disk scene: named geometry over a shared point table.  Coordinates are
// exact rationals; the text form stores them as "p/q" strings (integers,
// decimals and bare integer literals are accepted on input and converted
// exactly).  serialize/parse round-trip bit for bit.
struct Scene {
  std::vector<Pt> points;
  std::map<std::string, std::vector<std::size_t>> lists;  // indices into points
  std::map<std::string, Polygon> polygons;
  std::map<std::string, GenusRegion> regions;
  std::map<std::string, SampledFunction> functions;
};

bool operator==(const Scene& a, const Scene& b);

Scene parse_scene(const std::string& text);  // Err::Parse, with location for syntax errors
Scene load_scene(const std::string& path);
std::string serialize_scene(const Scene& s);
void save_scene(const Scene& s, const std::string& path);

// Lookups by id; Err::UnknownId names the missing entry.
std::vector<Pt> scene_list_points(const Scene& s, const std::string& id);
const Polygon& scene_polygon(const Scene& s, const std::string& id);
const GenusRegion& scene_region(const Scene& s, const std::string& id);
const SampledFunction& scene_function(const Scene& s, const std::string& id);

// Every element pushed through the chain: points and function domains map
// pointwise, polygons and regions through the subdividing image operations.
Scene map_scene(const Chain& c, const Scene& s);

}  // namespace acs
