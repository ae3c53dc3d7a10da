#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geom/core.hpp"
#include "geom/polygon.hpp"

using namespace acs;

TEST_CASE("rational canonical form and parsing") {
  Rat q = rat(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(rat_from_string("3/4") == rat(3, 4));
  CHECK(rat_from_string("-3") == rat(-3));
  CHECK(rat_from_string("+7") == rat(7));
  CHECK(rat_from_string("1.25") == rat(5, 4));
  CHECK(rat_from_string("-0.5") == rat(-1, 2));
  CHECK(rat_from_string("10/4") == rat(5, 2));
  // leading zeros must never trigger octal interpretation
  CHECK(rat_from_string("0.25") == rat(1, 4));
  CHECK(rat_from_string("0.125") == rat(1, 8));
  CHECK(rat_from_string("0.89") == rat(89, 100));
  CHECK(rat_from_string("08") == rat(8));
  CHECK(rat_from_string("09/03") == rat(3));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("abc"), Error);
  CHECK_THROWS_AS(rat_from_string("1.2.3"), Error);
  CHECK_THROWS_AS(rat_from_string(""), Error);
  CHECK(rat_to_string(rat(5, 2)) == "5/2");
  CHECK(rat_to_string(rat(-7)) == "-7");
  // arithmetic keeps the canonical invariants
  Rat r = rat(1, 6) + rat(1, 3);
  CHECK(r.get_num() == 1);
  CHECK(r.get_den() == 2);
}

TEST_CASE("exact square roots") {
  CHECK(rat_sqrt_exact(rat(9, 4)) == rat(3, 2));
  CHECK(rat_sqrt_exact(rat(0)) == rat(0));
  CHECK(rat_sqrt_exact(rat(2)) == std::nullopt);
  CHECK(rat_sqrt_exact(rat(-1)) == std::nullopt);
  CHECK(rat_sqrt_exact(rat(50, 8)) == rat(5, 2));  // canonical 25/4
}

TEST_CASE("decimal rendering is exact and stable") {
  CHECK(rat_to_decimal(rat(1, 2), 12) == "0.5");
  CHECK(rat_to_decimal(rat(1, 3), 12) == "0.333333333333");
  CHECK(rat_to_decimal(rat(2, 3), 3) == "0.667");
  CHECK(rat_to_decimal(rat(200), 12) == "200");
  CHECK(rat_to_decimal(rat(-1, 8), 12) == "-0.125");
  CHECK(rat_to_decimal(rat(999, 1000), 2) == "1");
  CHECK(rat_to_decimal(rat(1, 200), 3) == "0.005");
  CHECK(rat_to_decimal(Rat(0), 12) == "0");
}

TEST_CASE("line normalization is canonical") {
  Pt a{rat(0), rat(0)}, b{rat(2), rat(2)};
  Line l = line_through(a, b);
  CHECK(l.a == 1);
  CHECK(l.b == -1);
  CHECK(l.c == 0);
  CHECK(line_through(b, a) == l);
  CHECK(line_from_coeffs(rat(-3), rat(3), rat(0)) == l);
  Line h = line_through(Pt{rat(0), rat(1)}, Pt{rat(5), rat(1)});
  CHECK(h.a == 0);
  CHECK(h.b == 1);
  CHECK(h.c == -1);
  CHECK_THROWS_AS(line_through(a, a), Error);
  CHECK_THROWS_AS(line_from_coeffs(rat(0), rat(0), rat(1)), Error);
}

TEST_CASE("side of line") {
  Line x_axis = line_through(Pt{rat(0), rat(0)}, Pt{rat(1), rat(0)});
  CHECK(side(x_axis, Pt{rat(5), rat(1)}) == 1);
  CHECK(side(x_axis, Pt{rat(5), rat(-1)}) == -1);
  CHECK(side(x_axis, Pt{rat(5), rat(0)}) == 0);
  CHECK(on_line(x_axis, Pt{rat(-3), rat(0)}));
  // meet of two lines
  Line d = line_through(Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)});
  Pt m = line_meet(x_axis, d);
  CHECK(m == Pt{rat(0), rat(0)});
  CHECK(parallel(x_axis, line_through(Pt{rat(0), rat(3)}, Pt{rat(1), rat(3)})));
}

TEST_CASE("segment intersection classification") {
  Seg s{{rat(0), rat(0)}, {rat(2), rat(0)}};
  Seg t{{rat(1), rat(-1)}, {rat(1), rat(1)}};
  Hit h = seg_intersect(s, t);
  CHECK(h.kind == HitKind::Point);
  CHECK(h.p == Pt{rat(1), rat(0)});

  Seg touch{{rat(2), rat(0)}, {rat(3), rat(5)}};
  h = seg_intersect(s, touch);
  CHECK(h.kind == HitKind::Point);
  CHECK(h.p == Pt{rat(2), rat(0)});

  Seg over{{rat(1), rat(0)}, {rat(5), rat(0)}};
  CHECK(seg_intersect(s, over).kind == HitKind::Overlap);

  Seg coll{{rat(3), rat(0)}, {rat(5), rat(0)}};
  CHECK(seg_intersect(s, coll).kind == HitKind::Disjoint);

  Seg coll_touch{{rat(2), rat(0)}, {rat(5), rat(0)}};
  h = seg_intersect(s, coll_touch);
  CHECK(h.kind == HitKind::Point);
  CHECK(h.p == Pt{rat(2), rat(0)});

  Seg far{{rat(0), rat(1)}, {rat(2), rat(1)}};
  CHECK(seg_intersect(s, far).kind == HitKind::Disjoint);

  Seg degen{{rat(1), rat(0)}, {rat(1), rat(0)}};
  CHECK(seg_intersect(s, degen).kind == HitKind::Point);
  CHECK(seg_intersect(degen, degen).kind == HitKind::Point);
  Seg degen_off{{rat(1), rat(1)}, {rat(1), rat(1)}};
  CHECK(seg_intersect(s, degen_off).kind == HitKind::Disjoint);

  // T-touch in the middle of an edge
  Seg stem{{rat(1), rat(0)}, {rat(1), rat(7)}};
  h = seg_intersect(s, stem);
  CHECK(h.kind == HitKind::Point);
  CHECK(h.p == Pt{rat(1), rat(0)});
}

TEST_CASE("affine maps") {
  std::array<Pt, 3> src = {Pt{rat(0), rat(0)}, Pt{rat(1), rat(0)}, Pt{rat(0), rat(1)}};
  std::array<Pt, 3> dst = {Pt{rat(1), rat(1)}, Pt{rat(3), rat(2)}, Pt{rat(0), rat(4)}};
  Affine f = affine_from_triangles(src, dst);
  for (int i = 0; i < 3; ++i) CHECK(apply(f, src[i]) == dst[i]);
  Affine g = inverse(f);
  Pt p{rat(7, 3), rat(-2, 5)};
  CHECK(apply(g, apply(f, p)) == p);
  CHECK(compose(g, f) == affine_identity());
  CHECK(det(compose(f, g)) == rat(1));

  Affine sing{rat(1), rat(2), rat(2), rat(4), rat(0), rat(0)};
  CHECK_THROWS_AS(inverse(sing), Error);
  std::array<Pt, 3> degen = {Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)}, Pt{rat(2), rat(2)}};
  CHECK_THROWS_AS(affine_from_triangles(degen, dst), Error);
}

TEST_CASE("polygon validation and canonical form") {
  std::vector<Pt> sq = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}};
  Polygon p = make_polygon(sq);
  CHECK(p.size() == 4);
  CHECK(p.v[0] == Pt{rat(0), rat(0)});
  CHECK(area2(p.v) == rat(2));

  // clockwise input is reoriented, rotated input is re-anchored
  Polygon q = make_polygon({{rat(1), rat(1)}, {rat(1), rat(0)}, {rat(0), rat(0)}, {rat(0), rat(1)}});
  CHECK(q == p);
  Polygon r = make_polygon({{rat(1), rat(1)}, {rat(0), rat(1)}, {rat(0), rat(0)}, {rat(1), rat(0)}});
  CHECK(r == p);

  // explicit closure accepted
  Polygon c = make_polygon(
      {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}, {rat(0), rat(0)}});
  CHECK(c == p);

  CHECK_THROWS_AS(make_polygon({{rat(0), rat(0)}, {rat(1), rat(0)}}), Error);
  // bowtie
  CHECK_THROWS_AS(
      make_polygon({{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(1), rat(0)}, {rat(0), rat(1)}}),
      Error);
  // collinear run
  CHECK_THROWS_AS(make_polygon({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)},
                                {rat(2), rat(1)}, {rat(0), rat(1)}}),
                  Error);
  // repeated vertex
  CHECK_THROWS_AS(make_polygon({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)},
                                {rat(0), rat(0)}, {rat(0), rat(1)}}),
                  Error);

  Polygon tri = make_polygon({{rat(0), rat(-1)}, {rat(1), rat(0)}, {rat(0), rat(1)}});
  CHECK(tri.v[0] == Pt{rat(0), rat(-1)});
  CHECK(is_convex(tri));
}

TEST_CASE("traversal cleanup drops straight-through vertices") {
  Polygon p = polygon_from_traversal({{rat(0), rat(0)},
                                      {rat(1, 2), rat(0)},
                                      {rat(1), rat(0)},
                                      {rat(1), rat(1)},
                                      {rat(1), rat(1)},
                                      {rat(0), rat(1)}});
  CHECK(p.size() == 4);
  CHECK(p == make_polygon({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}}));
}

TEST_CASE("point location") {
  Polygon L = make_polygon({{rat(0), rat(0)},
                            {rat(2), rat(0)},
                            {rat(2), rat(1)},
                            {rat(1), rat(1)},
                            {rat(1), rat(2)},
                            {rat(0), rat(2)}});
  CHECK(locate(L, Pt{rat(1, 2), rat(1, 2)}) == Where::Inside);
  CHECK(locate(L, Pt{rat(3, 2), rat(1, 2)}) == Where::Inside);
  CHECK(locate(L, Pt{rat(1, 2), rat(3, 2)}) == Where::Inside);
  CHECK(locate(L, Pt{rat(3, 2), rat(3, 2)}) == Where::Outside);
  CHECK(locate(L, Pt{rat(1), rat(1)}) == Where::Boundary);
  CHECK(locate(L, Pt{rat(1), rat(0)}) == Where::Boundary);
  CHECK(locate(L, Pt{rat(-1), rat(1)}) == Where::Outside);
  CHECK(locate(L, Pt{rat(3, 2), rat(1)}) == Where::Boundary);
  CHECK_FALSE(is_convex(L));

  // rays through vertices must not double-count
  Polygon dia = make_polygon({{rat(1), rat(0)}, {rat(2), rat(1)}, {rat(1), rat(2)}, {rat(0), rat(1)}});
  CHECK(locate(dia, Pt{rat(1), rat(1)}) == Where::Inside);
  CHECK(locate(dia, Pt{rat(-1), rat(1)}) == Where::Outside);
  CHECK(locate(dia, Pt{rat(3), rat(1)}) == Where::Outside);
}

TEST_CASE("open segment classification") {
  Polygon L = make_polygon({{rat(0), rat(0)},
                            {rat(2), rat(0)},
                            {rat(2), rat(1)},
                            {rat(1), rat(1)},
                            {rat(1), rat(2)},
                            {rat(0), rat(2)}});
  // neighbor diagonals of the L-shaped hexagon, derived by hand
  CHECK(open_seg_in_interior(L, Pt{rat(0), rat(0)}, Pt{rat(2), rat(1)}));   // around (2,0)
  CHECK(open_seg_in_interior(L, Pt{rat(2), rat(0)}, Pt{rat(1), rat(1)}));   // around (2,1)
  CHECK_FALSE(open_seg_in_interior(L, Pt{rat(2), rat(1)}, Pt{rat(1), rat(2)}));  // around (1,1)
  CHECK_FALSE(open_seg_in_interior(L, Pt{rat(0), rat(2)}, Pt{rat(2), rat(0)}));  // through (1,1)
  CHECK(open_seg_in_exterior(L, Pt{rat(2), rat(1)}, Pt{rat(2), rat(2)}));
  CHECK_FALSE(open_seg_in_exterior(L, Pt{rat(2), rat(1)}, Pt{rat(0), rat(1)}));
}

TEST_CASE("polygon containment and disjointness") {
  Polygon outer = make_polygon({{rat(0), rat(0)}, {rat(10), rat(0)}, {rat(10), rat(10)}, {rat(0), rat(10)}});
  Polygon in1 = make_polygon({{rat(1), rat(1)}, {rat(2), rat(1)}, {rat(2), rat(2)}});
  Polygon in2 = make_polygon({{rat(5), rat(5)}, {rat(6), rat(5)}, {rat(6), rat(6)}});
  CHECK(inside_strict(in1, outer));
  CHECK(inside_strict(in2, outer));
  CHECK_FALSE(inside_strict(outer, in1));
  CHECK(disjoint_closed(in1, in2));
  Polygon touching = make_polygon({{rat(2), rat(1)}, {rat(3), rat(1)}, {rat(3), rat(2)}});
  CHECK_FALSE(disjoint_closed(in1, touching));
  Polygon crossing = make_polygon({{rat(0), rat(0)}, {rat(3), rat(0)}, {rat(3), rat(3)}});
  CHECK_FALSE(inside_strict(crossing, outer));  // shares boundary
}

TEST_CASE("rectangles and corner points") {
  Rectangle unit = make_rectangle({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}});
  CHECK(unit.center == Pt{rat(1, 2), rat(1, 2)});
  auto c = eps_corners(unit, rat(1, 10));
  CHECK(c[0] == Pt{rat(1, 20), rat(1, 20)});
  CHECK(c[1] == Pt{rat(19, 20), rat(1, 20)});
  CHECK(c[2] == Pt{rat(19, 20), rat(19, 20)});
  CHECK(c[3] == Pt{rat(1, 20), rat(19, 20)});
  CHECK_THROWS_AS(eps_corners(unit, rat(1)), Error);
  CHECK_THROWS_AS(eps_corners(unit, rat(0)), Error);
  CHECK_THROWS_AS(eps_corners(unit, rat(3, 2)), Error);

  // tilted rectangle
  Rectangle tilt = make_rectangle({{rat(0), rat(0)}, {rat(2), rat(2)}, {rat(1), rat(3)}, {rat(-1), rat(1)}});
  CHECK(tilt.center == Pt{rat(1, 2), rat(3, 2)});
  CHECK_THROWS_AS(make_rectangle({{rat(0), rat(0)}, {rat(2), rat(0)}, {rat(3), rat(1)}, {rat(1), rat(1)}}),
                  Error);
  Rectangle fr = rectangle_from_frame(Pt{rat(0), rat(0)}, Pt{rat(1), rat(1)}, Pt{rat(-1), rat(1)},
                                      rat(0), rat(1), rat(0), rat(1));
  CHECK(fr.p.size() == 4);
  CHECK(locate(fr.p, Pt{rat(0), rat(1)}) == Where::Inside);
}

TEST_CASE("homogeneous points match rational sides") {
  Line l = line_through(Pt{rat(1, 3), rat(2)}, Pt{rat(-5, 7), rat(1, 2)});
  for (long i = -3; i <= 3; ++i) {
    Pt p{rat(i, 2), rat(-i, 3)};
    CHECK(side(l, p) == side(l, to_homo(p)));
  }
}
