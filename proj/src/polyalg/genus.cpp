#include "polyalg/genus.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

namespace acs {

namespace {

struct BBox {
  Rat xlo, xhi, ylo, yhi;
};

BBox bbox_of(const Polygon& p) {
  BBox b{p.v[0].x, p.v[0].x, p.v[0].y, p.v[0].y};
  for (const Pt& q : p.v) {
    b.xlo = rat_min(b.xlo, q.x);
    b.xhi = rat_max(b.xhi, q.x);
    b.ylo = rat_min(b.ylo, q.y);
    b.yhi = rat_max(b.yhi, q.y);
  }
  return b;
}

// canonical polygons start at the lexicographically smallest vertex
Rat min_x(const Polygon& p) { return p.at(0).x; }

Pt lex_max_vertex(const Polygon& p) {
  Pt best = p.v[0];
  for (const Pt& q : p.v)
    if (lex_less(best, q)) best = q;
  return best;
}

Polygon shrink_toward(const Pt& w, const Pt& p1, const Pt& p2, const Rat& lam) {
  return triangle(w, w + scale(lam, p1 - w), w + scale(lam, p2 - w));
}

// Pull a triangular window toward its vertex w by factor lam: two
// single-vertex moves whose supports avoid the obstacles and stay strictly
// inside the outer polygon.
void emit_shrink(Polygon tri, Pt w, const Rat& lam, std::vector<Polygon> obstacles,
                 Polygon outer, const std::function<void(const Step&)>& emit) {
  std::size_t wi = 3;
  for (std::size_t i = 0; i < 3; ++i)
    if (tri.at(i) == w) wi = i;
  if (wi == 3) fail(Err::Internal, "shrink anchor must be a vertex of the window");
  Pt p1 = tri.at(wi + 1), p2 = tri.at(wi + 2);
  Pt p1h = w + scale(lam, p1 - w);
  Pt p2h = w + scale(lam, p2 - w);
  emit(Step{cap_vertex_move(w, p2, p1, p1h, obstacles, outer)});
  emit(Step{cap_vertex_move(w, p1h, p2, p2h, obstacles, outer)});
}

// Parameter ranges of the two triangles over an orthogonal frame (u, v)
// anchored at the origin.
struct FrameSpan {
  Rat ulo, uhi, vlo, vhi;
};

FrameSpan frame_span(const Polygon& from, const Polygon& to, const Pt& u, const Pt& v) {
  Rat uu = dot(u, u), vv = dot(v, v);
  FrameSpan s;
  bool first = true;
  for (const Polygon* poly : {&from, &to}) {
    for (const Pt& q : poly->v) {
      Rat pu = dot(u, q) / uu;
      Rat pv = dot(v, q) / vv;
      if (first) {
        s.ulo = s.uhi = pu;
        s.vlo = s.vhi = pv;
        first = false;
      } else {
        s.ulo = rat_min(s.ulo, pu);
        s.uhi = rat_max(s.uhi, pu);
        s.vlo = rat_min(s.vlo, pv);
        s.vhi = rat_max(s.vhi, pv);
      }
    }
  }
  return s;
}

// Tightest rectangle in the frame that covers both triangles; every feasible
// support box shrinks to this, so whatever overlaps it blocks the move.
Rectangle limit_box(const Polygon& from, const Polygon& to, const Pt& u, const Pt& v) {
  FrameSpan s = frame_span(from, to, u, v);
  return rectangle_from_frame(Pt{rat(0), rat(0)}, u, v, s.ulo, s.uhi, s.vlo, s.vhi);
}

// Relocate a triangle onto a target triangle through a rectangle aligned with
// the orthogonal frame (u, v), strictly inside the outer polygon and clear of
// every obstacle; the margin around the covering box is halved until all
// conditions hold.
std::optional<std::vector<Step>> relocate_via_frame(const Polygon& from, const Polygon& to,
                                                    const std::vector<Polygon>& obstacles,
                                                    const Polygon& outer, const Pt& u,
                                                    const Pt& v) {
  FrameSpan s = frame_span(from, to, u, v);
  Rat mu = rat_of(1, 4);
  for (int it = 0; it < 60; ++it, mu /= 2) {
    Rectangle box;
    try {
      box = rectangle_from_frame(Pt{rat(0), rat(0)}, u, v, s.ulo - mu, s.uhi + mu, s.vlo - mu,
                                 s.vhi + mu);
    } catch (const Error&) {
      continue;
    }
    if (!inside_strict(box.p, outer)) continue;
    if (!inside_strict(from, box.p) || !inside_strict(to, box.p)) continue;
    bool ok = true;
    for (const Polygon& ob : obstacles) {
      if (!disjoint_closed(box.p, ob)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return move_triangle_in_rectangle(from, to, box).chain.steps;
  }
  return std::nullopt;
}

// Axis-aligned frame first, then one tilted 45 degrees (needed when the
// target hugs a slanted edge of the outer triangle).
std::optional<std::vector<Step>> try_relocate(const Polygon& from, const Polygon& to,
                                              const std::vector<Polygon>& obstacles,
                                              const Polygon& outer) {
  const std::array<std::array<Pt, 2>, 2> frames = {{
      {Pt{rat(1), rat(0)}, Pt{rat(0), rat(1)}},
      {Pt{rat(1), rat(-1)}, Pt{rat(1), rat(1)}},
  }};
  for (const auto& f : frames) {
    if (auto steps = relocate_via_frame(from, to, obstacles, outer, f[0], f[1])) return steps;
  }
  return std::nullopt;
}

Polygon translate_poly(const Polygon& p, const Pt& d) {
  std::vector<Pt> ring;
  ring.reserve(p.size());
  for (const Pt& q : p.v) ring.push_back(q + d);
  return make_polygon(ring);
}

}  // namespace

GenusRegion make_genus_region(Polygon outer, std::vector<Polygon> windows) {
  for (const Polygon& w : windows) {
    if (!inside_strict(w, outer))
      fail(Err::InvalidRegion, "every window must lie strictly inside the outer polygon");
  }
  for (std::size_t i = 0; i < windows.size(); ++i)
    for (std::size_t j = i + 1; j < windows.size(); ++j)
      if (!disjoint_closed(windows[i], windows[j]))
        fail(Err::InvalidRegion, "windows must have pairwise disjoint closures");
  std::sort(windows.begin(), windows.end(),
            [](const Polygon& a, const Polygon& b) { return lex_less(a.v[0], b.v[0]); });
  return GenusRegion{std::move(outer), std::move(windows)};
}

GenusRegion standard_tau(std::size_t n) {
  Polygon outer = triangle(Pt{rat(0), rat(-1)}, Pt{rat(1), rat(0)}, Pt{rat(0), rat(1)});
  std::vector<Polygon> ws;
  for (std::size_t k = 1; k <= n; ++k) {
    long kk = static_cast<long>(k), nn = static_cast<long>(n);
    ws.push_back(triangle(Pt{rat(3 * kk - 2, 3 * nn), rat(0)},
                          Pt{rat(3 * kk - 1, 3 * nn), rat(0)},
                          Pt{rat(2 * kk - 1, 2 * nn), rat(1, 3 * nn)}));
  }
  return make_genus_region(std::move(outer), std::move(ws));
}

GenusRegion map_region(const Step& s, const GenusRegion& g) {
  Polygon outer = map_polygon(s, g.outer);
  std::vector<Polygon> ws;
  ws.reserve(g.windows.size());
  for (const Polygon& w : g.windows) ws.push_back(map_polygon(s, w));
  return make_genus_region(std::move(outer), std::move(ws));
}

GenusRegion map_region(const Chain& c, const GenusRegion& g) {
  GenusRegion cur = g;
  for (const Step& s : c.steps) cur = map_region(s, cur);
  return cur;
}

RegionCertificate normalize_genus_region(const GenusRegion& g0) {
  GenusRegion cur = make_genus_region(g0.outer, g0.windows);
  RegionCertificate cert;
  cert.snapshots.push_back(cur);

  // Window shapes in a stable working order; cur keeps them sorted instead.
  std::vector<Polygon> track = cur.windows;
  std::function<void(const Step&)> emit = [&](const Step& s) {
    cert.chain.steps.push_back(s);
    for (Polygon& w : track) w = map_polygon(s, w);
    cur = map_region(s, cur);
    cert.snapshots.push_back(cur);
  };
  auto obstacles_except = [&](std::size_t k) {
    std::vector<Polygon> obs;
    for (std::size_t j = 0; j < track.size(); ++j)
      if (j != k) obs.push_back(track[j]);
    return obs;
  };

  // every window down to a triangle first, avoiding the others
  for (std::size_t k = 0; k < track.size(); ++k) {
    Certificate c = reduce_polygon_to_triangle(track[k], obstacles_except(k), cur.outer);
    for (const Step& s : c.chain.steps) emit(s);
    if (track[k].size() != 3) fail(Err::Internal, "window did not reduce to a triangle");
  }

  // Push window j clear of the covering box lim of a pending move: shrink it
  // in place, and if it sits on the travel spine itself, nudge it aside
  // through a thin perpendicular tube.
  auto clear_blocker = [&](std::size_t j, const Rectangle& lim, const Pt& d) {
    for (int t = 0; t < 6; ++t) {
      if (disjoint_closed(lim.p, track[j])) return;
      emit_shrink(track[j], track[j].at(0), rat_of(1, 2), obstacles_except(j), cur.outer, emit);
    }
    if (disjoint_closed(lim.p, track[j])) return;
    Pt nv = rot90(d);
    for (int side = 0; side < 2; ++side) {
      Pt dir = side == 0 ? nv : Pt{rat(0), rat(0)} - nv;
      Rat eta = rat(2);
      for (int it = 0; it < 40; ++it, eta /= 2) {
        Pt shift = scale(eta, dir);
        Polygon tgt = translate_poly(track[j], shift);
        if (!disjoint_closed(lim.p, tgt)) break;  // smaller shifts stay blocked too
        auto mv = relocate_via_frame(track[j], tgt, obstacles_except(j), cur.outer, shift,
                                     rot90(shift));
        if (!mv) continue;
        for (const Step& s : *mv) emit(s);
        return;
      }
    }
    // otherwise the traveller keeps thinning its tube and may squeeze past
  };

  // Translate window wi so that its first vertex lands on to_anchor, clearing
  // or shrinking whatever stands in the way.
  auto hop_translate = [&](std::size_t wi, const Pt& to_anchor) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      Pt d = to_anchor - track[wi].at(0);
      if (d == (Pt{rat(0), rat(0)})) return;
      Polygon target = translate_poly(track[wi], d);
      Pt nv = rot90(d);
      auto mv = relocate_via_frame(track[wi], target, obstacles_except(wi), cur.outer, d, nv);
      if (mv) {
        for (const Step& s : *mv) emit(s);
        return;
      }
      Rectangle lim = limit_box(track[wi], target, d, nv);
      for (std::size_t j = 0; j < track.size(); ++j) {
        if (j == wi) continue;
        if (disjoint_closed(lim.p, track[j])) continue;
        clear_blocker(j, lim, d);
      }
      // thin the travel tube by pulling the window toward its anchor
      emit_shrink(track[wi], track[wi].at(0), rat_of(1, 2), obstacles_except(wi), cur.outer,
                  emit);
    }
    fail(Err::Internal, "window routing stalled");
  };

  // When no corner of the outer polygon can be removed because every support
  // would hit a window, gather all windows inside one triangulation cell of
  // the shape the removal would leave, travelling between cell centroids.
  auto reroute_windows = [&](std::size_t e) {
    const std::size_t n0 = cur.outer.size();
    Pt chord_mid = midpoint(cur.outer.at(e + n0 - 1), cur.outer.at(e + 1));
    std::vector<Pt> ring;
    ring.reserve(n0 - 1);
    for (std::size_t k = 0; k < n0; ++k)
      if (k != e) ring.push_back(cur.outer.v[k]);
    Polygon clipped = raw_ring(std::move(ring));
    std::vector<std::array<Pt, 3>> cells = triangulate(clipped);
    auto cell_poly = [&](std::size_t i) { return triangle(cells[i][0], cells[i][1], cells[i][2]); };
    auto cell_centroid = [&](std::size_t i) {
      return scale(rat(1, 3), cells[i][0] + cells[i][1] + cells[i][2]);
    };
    std::size_t best = 0;
    Rat besta = rat(-1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      Rat a2 = area2({cells[i][0], cells[i][1], cells[i][2]});
      if (a2 > besta) {
        besta = a2;
        best = i;
      }
    }
    auto shared_edge_mid = [&](std::size_t s, std::size_t t) -> std::optional<Pt> {
      std::vector<Pt> common;
      for (const Pt& x : cells[s])
        for (const Pt& y : cells[t])
          if (x == y) common.push_back(x);
      if (common.size() == 2) return midpoint(common[0], common[1]);
      return std::nullopt;
    };
    Pt home = cell_centroid(best);
    Pt park_dir = midpoint(home, cells[best][0]) - home;
    const std::size_t nw = track.size();
    for (std::size_t i = 0; i < nw; ++i) {
      // spots farthest-first along one ray so later travel never crosses them
      Pt spot = home + scale(rat(static_cast<long>(nw - i), static_cast<long>(nw + 1)), park_dir);
      Pt w0 = track[i].at(0);
      std::optional<std::size_t> k0;
      for (std::size_t c = 0; c < cells.size() && !k0; ++c)
        if (locate(cell_poly(c), w0) != Where::Outside) k0 = c;
      if (!k0) {
        // the window sits in the corner being removed; enter through the chord
        for (std::size_t c = 0; c < cells.size() && !k0; ++c)
          if (locate(cell_poly(c), chord_mid) != Where::Outside) k0 = c;
      }
      if (!k0) fail(Err::Internal, "window has no cell to travel through");
      std::vector<int> prev(cells.size(), -1);
      std::vector<char> seen(cells.size(), 0);
      std::vector<std::size_t> queue{*k0};
      seen[*k0] = 1;
      for (std::size_t head = 0; head < queue.size() && !seen[best]; ++head) {
        std::size_t c = queue[head];
        for (std::size_t t = 0; t < cells.size(); ++t) {
          if (seen[t] || !shared_edge_mid(c, t)) continue;
          seen[t] = 1;
          prev[t] = static_cast<int>(c);
          queue.push_back(t);
        }
      }
      if (!seen[best]) fail(Err::Internal, "clipped shape is not edge-connected");
      std::vector<std::size_t> path;
      for (int c = static_cast<int>(best); c != -1; c = prev[c])
        path.push_back(static_cast<std::size_t>(c));
      std::reverse(path.begin(), path.end());
      std::vector<Pt> way;
      if (!(*k0 == best)) {
        way.push_back(cell_centroid(path[0]));
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
          way.push_back(*shared_edge_mid(path[s], path[s + 1]));
          way.push_back(cell_centroid(path[s + 1]));
        }
      }
      way.push_back(spot);
      for (const Pt& q : way) hop_translate(i, q);
    }
  };

  // outer polygon down to a triangle; supports avoid all windows
  std::size_t deadlock_size = 0;
  while (cur.outer.size() > 3) {
    std::vector<std::size_t> ears = find_ears(cur.outer);
    bool removed = false;
    // prefer ears that drop exactly their own vertex; when only straightening
    // clips remain, take one anyway — losing extra straight corners is sound
    // here, it just shortens the remaining work
    for (int pass = 0; pass < 2 && !removed; ++pass) {
      for (std::size_t e : ears) {
        if (pass == 0 && !clip_keeps_corners(cur.outer, e)) continue;
        EarQuad eq;
        try {
          eq = construct_ear_quadrilateral(cur.outer, e, track, std::nullopt);
        } catch (const Error&) {
          continue;
        }
        std::size_t before = cur.outer.size();
        emit(Step{make_lpa(eq.quad, affine_identity(), eq.v, eq.m)});
        if (cur.outer.size() >= before)
          fail(Err::Internal, "corner removal must drop a vertex");
        removed = true;
        break;
      }
    }
    if (removed) continue;
    if (ears.empty()) fail(Err::Internal, "simple ring without an ear");
    if (deadlock_size == cur.outer.size())
      fail(Err::Internal, "outer reduction stalled despite rerouting the windows");
    deadlock_size = cur.outer.size();
    reroute_windows(ears.front());
  }

  // affine map onto the standard triangle
  const Polygon std_outer =
      triangle(Pt{rat(0), rat(-1)}, Pt{rat(1), rat(0)}, Pt{rat(0), rat(1)});
  {
    const Polygon& t = cur.outer;
    Affine al = affine_from_triangles({t.at(0), t.at(1), t.at(2)},
                                      {std_outer.at(0), std_outer.at(1), std_outer.at(2)});
    if (!is_identity(al)) emit(Step{al});
  }
  if (!(cur.outer == std_outer)) fail(Err::Internal, "outer normalization failed");

  std::size_t n = track.size();
  GenusRegion std_region = standard_tau(n);

  if (n > 0) {
    // make the windows' leftmost x-coordinates pairwise distinct
    for (std::size_t k = 0; k < n; ++k) {
      auto collides = [&](const Rat& x) {
        for (std::size_t j = 0; j < n; ++j)
          if (j != k && min_x(track[j]) == x) return true;
        return false;
      };
      if (!collides(min_x(track[k]))) continue;
      Pt u = lex_max_vertex(track[k]);
      std::vector<Pt> rest;
      for (const Pt& q : track[k].v)
        if (!(q == u)) rest.push_back(q);
      bool done = false;
      Rat lam = rat_of(1, 2);
      for (int it = 0; it < 120 && !done; ++it, lam /= 2) {
        Polygon cand = shrink_toward(u, rest[0], rest[1], lam);
        if (collides(min_x(cand))) continue;
        emit_shrink(track[k], u, lam, obstacles_except(k), std_outer, emit);
        if (!(track[k] == cand)) fail(Err::Internal, "window shrink went astray");
        done = true;
      }
      if (!done) fail(Err::Internal, "could not separate window abscissas");
    }

    // left-to-right working order and separators between consecutive windows
    std::sort(track.begin(), track.end(),
              [](const Polygon& a, const Polygon& b) { return min_x(a) < min_x(b); });
    std::vector<Rat> xs(n);
    for (std::size_t k = 0; k < n; ++k) xs[k] = min_x(track[k]);
    std::vector<Rat> sep(n + 1);
    sep[0] = xs[0] / 2;
    for (std::size_t k = 1; k < n; ++k) sep[k] = (xs[k - 1] + xs[k]) / 2;
    sep[n] = (xs[n - 1] + 1) / 2;

    // shrink each window strictly between its separators, certified by an
    // axis-aligned box with margin inside the outer triangle
    for (std::size_t k = 0; k < n; ++k) {
      Pt w = track[k].at(0);
      Pt r1 = track[k].at(1), r2 = track[k].at(2);
      bool done = false;
      Rat lam = rat(1);
      for (int it = 0; it < 120 && !done; ++it, lam /= 2) {
        Polygon cand = it == 0 ? track[k] : shrink_toward(w, r1, r2, lam);
        BBox b = bbox_of(cand);
        if (!(sep[k] < b.xlo && b.xhi < sep[k + 1])) continue;
        bool fits = false;
        Rat mu = rat_of(1, 4);
        for (int jt = 0; jt < 60 && !fits; ++jt, mu /= 2) {
          Rectangle box =
              make_rectangle({Pt{b.xlo - mu, b.ylo - mu}, Pt{b.xhi + mu, b.ylo - mu},
                              Pt{b.xhi + mu, b.yhi + mu}, Pt{b.xlo - mu, b.yhi + mu}});
          fits = inside_strict(box.p, std_outer);
        }
        if (!fits) continue;
        if (it != 0) {
          emit_shrink(track[k], w, lam, obstacles_except(k), std_outer, emit);
          if (!(track[k] == cand)) fail(Err::Internal, "window shrink went astray");
        }
        done = true;
      }
      if (!done) fail(Err::Internal, "could not confine a window between its separators");
    }

    // parking scale: spots sit left of every window and left of every slot
    Rat delta = rat_min(xs[0] / 2, rat(1, 3 * static_cast<long>(n))) / 2;
    auto cluster_spot = [&](std::size_t k, const Rat& gamma, const Rat& ylift) {
      const Polygon& sw = std_region.windows[k];
      Pt a0{delta * sw.at(0).x, delta * sw.at(0).y};
      std::vector<Pt> ring;
      for (std::size_t i = 0; i < 3; ++i) {
        Pt q{delta * sw.at(i).x, delta * sw.at(i).y};
        Pt s = a0 + scale(gamma, q - a0);
        ring.push_back(Pt{s.x, s.y + ylift});
      }
      return make_polygon(ring);
    };

    // park left to right: first slide at the window's own height into its
    // x-slot near the left corner, then drop to ground level
    for (std::size_t k = 0; k < n; ++k) {
      Rat ylift = track[k].at(0).y;
      bool done = false;
      Rat gamma = rat_of(1, 2);
      for (int it = 0; it < 60 && !done; ++it, gamma /= 2) {
        Polygon d1;
        try {
          d1 = cluster_spot(k, gamma, ylift);
        } catch (const Error&) {
          continue;
        }
        if (!inside_strict(d1, std_outer)) continue;
        Polygon c1 = cluster_spot(k, gamma, rat(0));
        auto leg1 = try_relocate(track[k], d1, obstacles_except(k), std_outer);
        if (!leg1) continue;
        std::optional<std::vector<Step>> leg2;
        if (!(d1 == c1)) {
          leg2 = try_relocate(d1, c1, obstacles_except(k), std_outer);
          if (!leg2) continue;
        }
        for (const Step& s : *leg1) emit(s);
        if (leg2)
          for (const Step& s : *leg2) emit(s);
        done = true;
      }
      if (!done) fail(Err::Internal, "window cannot reach its parking slot");
    }

    // place right to left into the standard slots
    for (std::size_t k = n; k-- > 0;) {
      auto steps = try_relocate(track[k], std_region.windows[k], obstacles_except(k), std_outer);
      if (!steps) fail(Err::Internal, "window cannot reach its standard slot");
      for (const Step& s : *steps) emit(s);
    }
  }

  if (!(cur == std_region)) fail(Err::Internal, "normalization must end at the standard region");
  return cert;
}

}  // namespace acs
