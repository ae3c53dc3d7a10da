#include "io/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acs {

namespace {

using Json = nlohmann::ordered_json;

Rat coord_of(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const Error& e) {
      fail(Err::Parse, where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_number_float()) {
    // Exact value of the binary double the parser produced.  Quote decimals
    // to get exact decimal semantics instead.
    Rat q;
    mpq_set_d(q.get_mpq_t(), j.get<double>());
    return q;
  }
  fail(Err::Parse, where + ": expected a rational (string \"p/q\", decimal, or integer)");
}

Pt pt_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(Err::Parse, where + ": expected [x, y]");
  return Pt{coord_of(j[0], where + "[0]"), coord_of(j[1], where + "[1]")};
}

std::vector<Pt> pts_of(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(Err::Parse, where + ": expected an array of points");
  std::vector<Pt> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(pt_of(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Polygon polygon_of(const Json& j, const std::string& where) {
  try {
    return make_polygon(pts_of(j, where));
  } catch (const Error& e) {
    if (e.code() == Err::Parse) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
}

Cx value_of(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) fail(Err::Parse, where + ": expected [re, im]");
    return Cx{coord_of(j[0], where + "[0]"), coord_of(j[1], where + "[1]")};
  }
  return Cx{coord_of(j, where), rat(0)};
}

Json coord_json(const Rat& r) { return rat_to_string(r); }

Json pt_json(const Pt& p) { return Json::array({coord_json(p.x), coord_json(p.y)}); }

Json pts_json(const std::vector<Pt>& v) {
  Json out = Json::array();
  for (const Pt& p : v) out.push_back(pt_json(p));
  return out;
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(Err::Parse, where + ": expected an object");
}

}  // namespace

bool operator==(const Scene& a, const Scene& b) {
  auto fn_eq = [](const SampledFunction& f, const SampledFunction& g) {
    return f.domain == g.domain && f.value == g.value;
  };
  if (!(a.points == b.points && a.lists == b.lists && a.polygons == b.polygons &&
        a.regions == b.regions))
    return false;
  if (a.functions.size() != b.functions.size()) return false;
  auto it = b.functions.begin();
  for (const auto& [id, f] : a.functions) {
    if (it->first != id || !fn_eq(f, it->second)) return false;
    ++it;
  }
  return true;
}

Scene parse_scene(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Err::Parse, e.what());  // message carries line and column
  }
  expect_object(j, "scene");
  Scene s;
  if (j.contains("points")) {
    s.points = pts_of(j["points"], "points");
  }
  if (j.contains("lists")) {
    expect_object(j["lists"], "lists");
    for (const auto& [id, arr] : j["lists"].items()) {
      const std::string where = "lists[\"" + id + "\"]";
      if (!arr.is_array()) fail(Err::Parse, where + ": expected an array of point indices");
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer() || arr[i].get<long long>() < 0)
          fail(Err::Parse, where + "[" + std::to_string(i) + "]: expected a point index");
        auto k = arr[i].get<std::size_t>();
        if (k >= s.points.size())
          fail(Err::Parse, where + "[" + std::to_string(i) + "]: index " + std::to_string(k) +
                               " out of range (points has " + std::to_string(s.points.size()) +
                               " entries)");
        idx.push_back(k);
      }
      s.lists.emplace(id, std::move(idx));
    }
  }
  if (j.contains("polygons")) {
    expect_object(j["polygons"], "polygons");
    for (const auto& [id, ring] : j["polygons"].items())
      s.polygons.emplace(id, polygon_of(ring, "polygons[\"" + id + "\"]"));
  }
  if (j.contains("regions")) {
    expect_object(j["regions"], "regions");
    for (const auto& [id, reg] : j["regions"].items()) {
      const std::string where = "regions[\"" + id + "\"]";
      expect_object(reg, where);
      if (!reg.contains("outer")) fail(Err::Parse, where + ": missing \"outer\"");
      Polygon outer = polygon_of(reg["outer"], where + ".outer");
      std::vector<Polygon> windows;
      if (reg.contains("windows")) {
        if (!reg["windows"].is_array()) fail(Err::Parse, where + ".windows: expected an array");
        for (std::size_t i = 0; i < reg["windows"].size(); ++i)
          windows.push_back(polygon_of(reg["windows"][i], where + ".windows[" + std::to_string(i) + "]"));
      }
      try {
        s.regions.emplace(id, make_genus_region(std::move(outer), std::move(windows)));
      } catch (const Error& e) {
        throw Error(e.code(), where + ": " + e.what());
      }
    }
  }
  if (j.contains("functions")) {
    expect_object(j["functions"], "functions");
    for (const auto& [id, fn] : j["functions"].items()) {
      const std::string where = "functions[\"" + id + "\"]";
      expect_object(fn, where);
      if (!fn.contains("points") || !fn.contains("values"))
        fail(Err::Parse, where + ": expected \"points\" and \"values\"");
      std::vector<Pt> dom = pts_of(fn["points"], where + ".points");
      if (!fn["values"].is_array() || fn["values"].size() != dom.size())
        fail(Err::Parse, where + ".values: expected one value per point");
      std::vector<Cx> vals;
      for (std::size_t i = 0; i < dom.size(); ++i)
        vals.push_back(value_of(fn["values"][i], where + ".values[" + std::to_string(i) + "]"));
      try {
        s.functions.emplace(id, make_function(std::move(dom), std::move(vals)));
      } catch (const Error& e) {
        throw Error(e.code(), where + ": " + e.what());
      }
    }
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot read scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string serialize_scene(const Scene& s) {
  Json j = Json::object();
  if (!s.points.empty()) j["points"] = pts_json(s.points);
  if (!s.lists.empty()) {
    Json lists = Json::object();
    for (const auto& [id, idx] : s.lists) lists[id] = idx;
    j["lists"] = std::move(lists);
  }
  if (!s.polygons.empty()) {
    Json polys = Json::object();
    for (const auto& [id, p] : s.polygons) polys[id] = pts_json(p.v);
    j["polygons"] = std::move(polys);
  }
  if (!s.regions.empty()) {
    Json regions = Json::object();
    for (const auto& [id, r] : s.regions) {
      Json reg = Json::object();
      reg["outer"] = pts_json(r.outer.v);
      Json wins = Json::array();
      for (const Polygon& w : r.windows) wins.push_back(pts_json(w.v));
      reg["windows"] = std::move(wins);
      regions[id] = std::move(reg);
    }
    j["regions"] = std::move(regions);
  }
  if (!s.functions.empty()) {
    Json fns = Json::object();
    for (const auto& [id, f] : s.functions) {
      Json fn = Json::object();
      fn["points"] = pts_json(f.domain);
      Json vals = Json::array();
      for (const Cx& v : f.value) {
        if (sgn(v.im) == 0)
          vals.push_back(coord_json(v.re));
        else
          vals.push_back(Json::array({coord_json(v.re), coord_json(v.im)}));
      }
      fn["values"] = std::move(vals);
      fns[id] = std::move(fn);
    }
    j["functions"] = std::move(fns);
  }
  return j.dump(2) + "\n";
}

void save_scene(const Scene& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Err::Io, "cannot write scene file: " + path);
  out << serialize_scene(s);
  if (!out) fail(Err::Io, "failed writing scene file: " + path);
}

std::vector<Pt> scene_list_points(const Scene& s, const std::string& id) {
  auto it = s.lists.find(id);
  if (it == s.lists.end()) fail(Err::UnknownId, "no list named \"" + id + "\" in scene");
  std::vector<Pt> out;
  out.reserve(it->second.size());
  for (std::size_t k : it->second) out.push_back(s.points[k]);
  return out;
}

const Polygon& scene_polygon(const Scene& s, const std::string& id) {
  auto it = s.polygons.find(id);
  if (it == s.polygons.end()) fail(Err::UnknownId, "no polygon named \"" + id + "\" in scene");
  return it->second;
}

const GenusRegion& scene_region(const Scene& s, const std::string& id) {
  auto it = s.regions.find(id);
  if (it == s.regions.end()) fail(Err::UnknownId, "no region named \"" + id + "\" in scene");
  return it->second;
}

const SampledFunction& scene_function(const Scene& s, const std::string& id) {
  auto it = s.functions.find(id);
  if (it == s.functions.end()) fail(Err::UnknownId, "no function named \"" + id + "\" in scene");
  return it->second;
}

Scene map_scene(const Chain& c, const Scene& s) {
  Scene out;
  out.points.reserve(s.points.size());
  for (const Pt& p : s.points) out.points.push_back(apply(c, p));
  out.lists = s.lists;
  for (const auto& [id, p] : s.polygons) out.polygons.emplace(id, map_polygon(c, p));
  for (const auto& [id, r] : s.regions) out.regions.emplace(id, map_region(c, r));
  for (const auto& [id, f] : s.functions)
    out.functions.emplace(id, transfer(f, [&](const Pt& p) { return apply(c, p); }));
  return out;
}

}  // namespace acs
