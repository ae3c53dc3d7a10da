#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "io/chainfile.hpp"
#include "io/scene.hpp"
#include "io/svg.hpp"
#include "polyalg/reduce.hpp"

using namespace acs;

namespace {

Pt p(long x, long y) { return Pt{rat(x), rat(y)}; }

Scene sample_scene() {
  Scene s;
  s.points = {p(1, 0), p(2, 0), Pt{rat(5, 2), rat(-3, 4)}};
  s.lists["S"] = {0, 1, 2, 1};
  s.polygons.emplace("P", make_polygon({p(0, 0), p(4, 0), p(4, 2), p(2, 2), p(2, 4), p(0, 4)}));
  s.regions.emplace("R", make_genus_region(
                             make_polygon({p(0, 0), p(4, 0), p(4, 4), p(0, 4)}),
                             {triangle(p(1, 1), p(2, 1), Pt{rat(3, 2), rat(2)})}));
  s.functions.emplace("f", make_function({p(0, 0), p(1, 0), p(2, 0)},
                                         {Cx{rat(0), rat(0)}, Cx{rat(1), rat(0)},
                                          Cx{rat(0), rat(1)}}));
  return s;
}

}  // namespace

TEST_CASE("scene: serialize and parse round-trip exactly") {
  Scene s = sample_scene();
  std::string text = serialize_scene(s);
  Scene back = parse_scene(text);
  CHECK(back == s);
  CHECK(serialize_scene(back) == text);
}

TEST_CASE("scene: every exact coordinate encoding is accepted") {
  const char* text = R"({
    "points": [[1, "1/2"], ["0.25", 0.5], ["-3", "0.125"]],
    "lists": {"S": [0, 1, 2]}
  })";
  Scene s = parse_scene(text);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0] == Pt{rat(1), rat(1, 2)});
  CHECK(s.points[1] == Pt{rat(1, 4), rat(1, 2)});  // 0.5 is exactly representable
  CHECK(s.points[2] == Pt{rat(-3), rat(1, 8)});
  CHECK(scene_list_points(s, "S").size() == 3);
}

TEST_CASE("scene: syntax errors carry a location, semantic errors a path") {
  try {
    parse_scene("{\"points\": [[1, 2]");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Parse);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    parse_scene(R"({"points": [["1","0"]], "lists": {"S": [4]}})");
    FAIL("expected an index error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Parse);
    CHECK(std::string(e.what()).find("lists[\"S\"]") != std::string::npos);
  }
  try {
    parse_scene(R"({"polygons": {"P": [["0","0"],["1","0"]]}})");
    FAIL("expected a geometry error");
  } catch (const Error& e) {
    CHECK(e.code() != Err::Parse);
    CHECK(std::string(e.what()).find("polygons[\"P\"]") != std::string::npos);
  }
  // window outside the outer polygon: rejected through region validation
  try {
    parse_scene(R"({"regions": {"R": {"outer": [["0","0"],["1","0"],["0","1"]],
                   "windows": [[["5","5"],["6","5"],["5","6"]]]}}})");
    FAIL("expected a region error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidRegion);
    CHECK(std::string(e.what()).find("regions[\"R\"]") != std::string::npos);
  }
}

TEST_CASE("scene: unknown ids name the missing entry") {
  Scene s = sample_scene();
  CHECK_THROWS_AS(scene_list_points(s, "nope"), Error);
  CHECK_THROWS_AS(scene_polygon(s, "nope"), Error);
  CHECK_THROWS_AS(scene_region(s, "nope"), Error);
  CHECK_THROWS_AS(scene_function(s, "nope"), Error);
  try {
    scene_polygon(s, "missing-polygon");
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownId);
    CHECK(std::string(e.what()).find("missing-polygon") != std::string::npos);
  }
}

TEST_CASE("scene: file save and load") {
  Scene s = sample_scene();
  const std::string path = "/tmp/acsigma_test_scene.json";
  save_scene(s, path);
  Scene back = load_scene(path);
  CHECK(back == s);
  CHECK_THROWS_AS(load_scene("/tmp/acsigma_does_not_exist.json"), Error);
}

TEST_CASE("scene: mapping through a chain moves every element") {
  Scene s = sample_scene();
  Affine shift{rat(1), rat(0), rat(0), rat(1), rat(3), rat(-2)};
  Chain c{{Step{shift}}};
  Scene m = map_scene(c, s);
  CHECK(m.points[0] == p(4, -2));
  CHECK(m.lists == s.lists);
  CHECK(m.polygons.at("P").at(0) == apply(shift, s.polygons.at("P").at(0)));
  CHECK(m.regions.at("R").genus() == 1);
  CHECK(m.functions.at("f").domain[1] == p(4, -2));
  CHECK(m.functions.at("f").value == s.functions.at("f").value);
  // inverse chain brings it back
  Scene back = map_scene(inverse(c), m);
  CHECK(back == s);
}

TEST_CASE("chain: handmade steps round-trip bit for bit") {
  Affine a{rat(2), rat(0), rat(1, 3), rat(1), rat(-5, 2), rat(0)};
  Affine h1 = affine_from_triangles({p(0, 0), p(1, 1), p(1, 0)},
                                    {p(0, 2), p(0, 4), p(1, 0)});
  Affine h2 = affine_from_triangles({p(0, 0), p(1, 1), p(0, 1)},
                                    {p(0, 2), p(0, 4), p(-1, 0)});
  HpaMap h = make_hpa(line_through(p(0, 0), p(1, 1)), h1, h2);
  Polygon C = make_polygon({p(0, 0), p(4, 0), p(4, 4), p(0, 4)});
  LpaMap l = make_lpa(C, affine_identity(), p(1, 1), p(2, 2));
  Chain c{{Step{a}, Step{h}, Step{l}}};
  std::string text = serialize_chain(c);
  Chain back = parse_chain(text);
  CHECK(back == c);
  CHECK(serialize_chain(back) == text);
}

TEST_CASE("chain: reduction certificates survive the file boundary") {
  Polygon hexagon = make_polygon({p(0, 0), p(4, 0), p(4, 2), p(2, 2), p(2, 4), p(0, 4)});
  Certificate cert = reduce_polygon_to_triangle(hexagon);
  REQUIRE(cert.chain.steps.size() == 3);
  Chain back = parse_chain(serialize_chain(cert.chain));
  CHECK(back == cert.chain);
  // the parsed chain still performs the same reduction
  CHECK(map_polygon(back, hexagon) == cert.snapshots.back());
  const std::string path = "/tmp/acsigma_test_chain.json";
  save_chain(cert.chain, path);
  CHECK(load_chain(path) == cert.chain);
}

TEST_CASE("chain: malformed documents are rejected with context") {
  CHECK_THROWS_AS(parse_chain("[]"), Error);
  try {
    parse_chain(R"({"steps": [{"kind": "affine", "map": {"m": ["1","0","0","0"], "t": ["0","0"]}}]})");
    FAIL("expected a singular-step error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Parse);
    CHECK(std::string(e.what()).find("steps[0]") != std::string::npos);
  }
  try {
    parse_chain(R"({"steps": [{"kind": "warp"}]})");
    FAIL("expected an unknown-kind error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("warp") != std::string::npos);
  }
}

TEST_CASE("svg: deterministic documents with the expected structure") {
  Polygon P = make_polygon({p(0, 0), p(4, 0), p(4, 2), p(2, 2), p(2, 4), p(0, 4)});
  SvgWindow w = window_pad(window_of(P), rat(1));
  std::string doc = svg_polygon_frame(P, w);
  CHECK(doc == svg_polygon_frame(P, w));
  CHECK(doc.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(doc.find("<polygon points=") != std::string::npos);

  GenusRegion g = make_genus_region(make_polygon({p(0, 0), p(4, 0), p(4, 4), p(0, 4)}),
                                    {triangle(p(1, 1), p(2, 1), Pt{rat(3, 2), rat(2)})});
  std::string rdoc = svg_region_frame(g, window_pad(window_of(g), rat(1)));
  CHECK(rdoc.find("fill-rule=\"evenodd\"") != std::string::npos);

  SvgCanvas canvas(w);
  canvas.add_infinite_line(line_from_coeffs(rat(0), rat(1), rat(0)), "#b04030");
  canvas.add_point(p(1, 0), "a<b");
  std::string cdoc = canvas.str();
  CHECK(cdoc.find("stroke-dasharray") != std::string::npos);
  CHECK(cdoc.find("a&lt;b") != std::string::npos);

  std::string plot = svg_plot_xy({{2, 1.0}, {4, 2.0}, {6, 3.0}}, 2.0, "growth");
  CHECK(plot.find("polyline") != std::string::npos);
  CHECK(plot.find("growth") != std::string::npos);
  CHECK(plot == svg_plot_xy({{2, 1.0}, {4, 2.0}, {6, 3.0}}, 2.0, "growth"));
}

TEST_CASE("svg: window helpers") {
  Polygon a = triangle(p(0, 0), p(2, 0), p(0, 2));
  Polygon b = triangle(p(-1, 5), p(3, 5), p(0, 7));
  SvgWindow u = window_union(window_of(a), window_of(b));
  CHECK(u.minx == rat(-1));
  CHECK(u.maxx == rat(3));
  CHECK(u.miny == rat(0));
  CHECK(u.maxy == rat(7));
  SvgWindow padded = window_pad(u, rat(1, 2));
  CHECK(padded.minx == rat(-3, 2));
  CHECK(padded.maxy == rat(15, 2));
}
