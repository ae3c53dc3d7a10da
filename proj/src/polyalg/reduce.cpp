#include "polyalg/reduce.hpp"

#include <array>
#include <cstddef>
#include <utility>

namespace acs {

namespace {

// Thrown inside a relocation stage when a margin check fails; the caller
// halves the corner pull and rebuilds both stages from scratch.
struct Retry {};

// Map fixing the corner ring of `r` outside a thin box and moving eps corner
// `xi` onto eps corner `ti`, keeping eps corners `yi` and `zi` (and the whole
// segment between them) pointwise fixed.  The support box sits on the line
// through the two fixed corners and is shrunk until it fits strictly inside
// the rectangle.
LpaMap trapezoid_move(const Rectangle& r, const std::array<Pt, 4>& eps,
                      std::size_t yi, std::size_t zi, std::size_t xi, std::size_t ti) {
  const Pt& y = eps[yi];
  const Pt& z = eps[zi];
  const Pt& x = eps[xi];
  const Pt& xh = eps[ti];
  Pt u = z - y;
  Pt n = rot90(u);
  Rat uu = dot(u, u);
  Rat vx = dot(n, x - y) / uu;
  if (sgn(vx) == 0 || sgn(dot(n, xh - y)) != sgn(vx))
    fail(Err::Internal, "vertex move endpoints must share a side of the fixed edge");
  Pt vdir = sgn(vx) > 0 ? n : Pt{-n.x, -n.y};
  auto pu = [&](const Pt& q) -> Rat { return dot(u, q - y) / uu; };
  auto pv = [&](const Pt& q) -> Rat { return dot(vdir, q - y) / uu; };
  Rat ulo = rat_min(rat(0), rat_min(pu(x), pu(xh)));
  Rat uhi = rat_max(rat(1), rat_max(pu(x), pu(xh)));
  Rat vhi = rat_max(pv(x), pv(xh));
  Rat mu = rat_of(1, 4);
  for (int it = 0; it < 60; ++it, mu /= 2) {
    Rectangle box;
    try {
      box = rectangle_from_frame(y, u, vdir, ulo - mu, uhi + mu, rat(0), vhi + mu);
    } catch (const Error&) {
      continue;
    }
    if (!inside_strict(box.p, r.p)) continue;
    if (locate(box.p, x) != Where::Inside) continue;
    if (locate(box.p, xh) != Where::Inside) continue;
    if (locate(box.p, y) != Where::Boundary) continue;
    if (locate(box.p, z) != Where::Boundary) continue;
    return make_lpa(box.p, affine_identity(), x, xh);
  }
  throw Retry{};
}

// Carry `t` onto the triangle spanned by the first three eps corners of `r`,
// one vertex at a time.  Every piece of support lies strictly inside `r`, so
// the chain is the identity on the rectangle's boundary and beyond.
Chain stage_to_corner_triangle(const Polygon& t, const Rectangle& r, const Rat& lam) {
  const std::vector<Pt>& ring = r.p.v;
  std::array<Pt, 4> eps = eps_corners(r, lam);
  Chain ch;
  Pt a = t.at(0), b = t.at(1), c = t.at(2);

  // First vertex: clip the rectangle along line(b, c) and push a to the eps
  // corner of the farthest rectangle corner on its side.  b and c lie on the
  // clip edge, hence stay fixed.
  Line cut1 = line_through(b, c);
  int sa = side(cut1, a);
  Polygon piece1 = clip_halfplane(r.p, cut1, sa);
  std::size_t i1 = 4;
  Rat best;
  for (std::size_t i = 0; i < 4; ++i) {
    if (side(cut1, ring[i]) != sa) continue;
    Rat d = rat_abs(line_eval(cut1, ring[i]));
    if (i1 == 4 || d > best) {
      i1 = i;
      best = d;
    }
  }
  if (i1 == 4) fail(Err::Internal, "cut line leaves no rectangle corner strictly on the apex side");
  Pt a1 = eps[i1];
  if (locate(piece1, a1) != Where::Inside) throw Retry{};
  ch.steps.push_back(Step{make_lpa(piece1, affine_identity(), a, a1)});

  // Second vertex: replace corner i1 of the ring by a1 (still convex), clip
  // along line(a1, c), and push b to an eps corner adjacent to i1.  a1 and c
  // lie on the clip edge, hence stay fixed.
  std::vector<Pt> qring = ring;
  qring[i1] = a1;
  Polygon q;
  try {
    q = make_polygon(qring);
  } catch (const Error&) {
    throw Retry{};
  }
  if (!is_convex(q) || q.size() != 4) throw Retry{};
  if (locate(q, b) != Where::Inside || locate(q, c) != Where::Inside) throw Retry{};
  Line cut2 = line_through(a1, c);
  int sb = side(cut2, b);
  if (sb == 0) throw Retry{};
  Polygon piece2 = clip_halfplane(q, cut2, sb);
  std::size_t i2 = 4;
  for (std::size_t off : {std::size_t{1}, std::size_t{3}}) {
    std::size_t cand = (i1 + off) % 4;
    if (locate(piece2, eps[cand]) != Where::Inside) continue;
    i2 = cand;
    break;
  }
  if (i2 == 4) throw Retry{};
  Pt b1 = eps[i2];
  ch.steps.push_back(Step{make_lpa(piece2, affine_identity(), b, b1)});

  // Third vertex: the quadrilateral on a1, b1 and the two remaining ring
  // corners (taken in ring order away from i1) has a1 and b1 as adjacent
  // vertices, so both stay fixed while c moves to the eps corner after i2.
  std::size_t d = (i2 + 4 - i1) % 4;
  std::size_t i3 = (i2 + d) % 4;
  std::size_t i4 = (i3 + d) % 4;
  Polygon q1;
  try {
    q1 = make_polygon({a1, b1, ring[i3], ring[i4]});
  } catch (const Error&) {
    throw Retry{};
  }
  if (!is_convex(q1) || q1.size() != 4) throw Retry{};
  if (locate(q1, c) != Where::Inside) throw Retry{};
  Pt c1 = eps[i3];
  if (locate(q1, c1) != Where::Inside) throw Retry{};
  ch.steps.push_back(Step{make_lpa(q1, affine_identity(), c, c1)});

  // The triangle now spans eps corners {i1, i2, i3}.  Finish by moving the
  // leftover corner(s) so it spans {0, 1, 2}; each move fixes an adjacent
  // pair, which always shares a side of the support line with the mover.
  std::size_t missing = i4;
  if (missing == 0) {
    ch.steps.push_back(Step{trapezoid_move(r, eps, 1, 2, 3, 0)});
  } else if (missing == 2) {
    ch.steps.push_back(Step{trapezoid_move(r, eps, 0, 1, 3, 2)});
  } else if (missing == 1) {
    ch.steps.push_back(Step{trapezoid_move(r, eps, 2, 3, 0, 1)});
    ch.steps.push_back(Step{trapezoid_move(r, eps, 1, 2, 3, 0)});
  }

  Polygon target = make_polygon({eps[0], eps[1], eps[2]});
  Polygon got = map_polygon(ch, t);
  if (!(got.v == target.v)) throw Retry{};
  return ch;
}

}  // namespace

Certificate reduce_polygon_to_triangle(const Polygon& p,
                                       const std::vector<Polygon>& obstacles,
                                       const std::optional<Polygon>& bound) {
  Certificate cert;
  cert.snapshots.push_back(p);
  Polygon cur = p;
  while (cur.size() > 3) {
    std::vector<std::size_t> ears = find_ears(cur);
    LpaMap step;
    bool made = false;
    for (std::size_t ear : ears) {
      if (!clip_keeps_corners(cur, ear)) continue;  // would drop a neighbor too
      EarQuad eq;
      try {
        eq = construct_ear_quadrilateral(cur, ear, obstacles, bound);
      } catch (const Error&) {
        continue;
      }
      step = make_lpa(eq.quad, affine_identity(), eq.v, eq.m);
      made = true;
      break;
    }
    if (!made) fail(Err::Internal, "no ear admits a clean clip with a support quadrilateral");
    Polygon next = map_polygon(Step{step}, cur);
    if (next.size() != cur.size() - 1)
      fail(Err::Internal, "reduction step must drop exactly one vertex");
    cert.chain.steps.push_back(Step{std::move(step)});
    cert.snapshots.push_back(next);
    cur = std::move(next);
  }
  return cert;
}

LpaMap cap_vertex_move(const Pt& y, const Pt& z, const Pt& x, const Pt& xhat,
                       const std::vector<Polygon>& obstacles,
                       const std::optional<Polygon>& bound) {
  if (orient(y, z, x) == 0) fail(Err::Degenerate, "cap move needs a nondegenerate triangle");
  Line base = line_through(y, z);
  if (side(base, xhat) != side(base, x))
    fail(Err::Degenerate, "cap move target must stay strictly on the moving side");
  Rat eps = rat_of(1, 2);
  for (int it = 0; it < 80; ++it, eps /= 2) {
    Pt p1 = x + scale(eps, x - y);
    Pt p2 = x + scale(eps, x - z);
    Polygon quad;
    try {
      quad = make_polygon({y, z, p1, p2});
    } catch (const Error&) {
      continue;
    }
    if (quad.size() != 4 || !is_convex(quad)) continue;
    if (locate(quad, x) != Where::Inside) continue;
    if (locate(quad, xhat) != Where::Inside) continue;
    bool ok = true;
    for (const Polygon& ob : obstacles) {
      if (!disjoint_closed(quad, ob)) {
        ok = false;
        break;
      }
    }
    if (ok && bound && !inside_strict(quad, *bound)) ok = false;
    if (!ok) continue;
    return make_lpa(quad, affine_identity(), x, xhat);
  }
  fail(Err::Internal, "cap vertex move failed to converge");
}

Certificate move_triangle_in_rectangle(const Polygon& t_from, const Polygon& t_to,
                                       const Rectangle& r) {
  if (t_from.size() != 3 || t_to.size() != 3)
    fail(Err::Degenerate, "relocation works on triangles");
  if (!inside_strict(t_from, r.p) || !inside_strict(t_to, r.p))
    fail(Err::MarginTooSmall, "triangles must sit strictly inside the rectangle");
  Rat lam = rat_of(1, 4);
  for (int it = 0; it < 60; ++it, lam /= 2) {
    Chain first, second;
    try {
      first = stage_to_corner_triangle(t_from, r, lam);
      second = stage_to_corner_triangle(t_to, r, lam);
    } catch (const Retry&) {
      continue;
    }
    Certificate cert;
    cert.chain = concat(first, inverse(second));
    cert.snapshots.push_back(t_from);
    for (const Step& s : cert.chain.steps)
      cert.snapshots.push_back(map_polygon(s, cert.snapshots.back()));
    if (!(cert.snapshots.back() == t_to))
      fail(Err::Internal, "relocation chain must carry the first triangle onto the second");
    return cert;
  }
  fail(Err::Internal, "relocation failed to converge");
}

}  // namespace acs
