#include "geom/core.hpp"

namespace acs {

bool lex_less(const Pt& a, const Pt& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
Pt scale(const Rat& k, const Pt& p) { return {k * p.x, k * p.y}; }
Pt midpoint(const Pt& a, const Pt& b) { return scale(rat(1, 2), a + b); }
Pt rot90(const Pt& p) { return {-p.y, p.x}; }
Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

int orient(const Pt& o, const Pt& a, const Pt& b) { return sgn(cross(a - o, b - o)); }
bool collinear(const Pt& a, const Pt& b, const Pt& c) { return orient(a, b, c) == 0; }

std::string pt_to_string(const Pt& p) {
  return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

HPt to_homo(const Pt& p) {
  // W = lcm of the two denominators keeps the entries small.
  Int dx = p.x.get_den(), dy = p.y.get_den();
  Int w;
  mpz_lcm(w.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  return {p.x.get_num() * (w / dx), p.y.get_num() * (w / dy), w};
}

bool line_less(const Line& l, const Line& m) {
  int c = cmp(l.a, m.a);
  if (c != 0) return c < 0;
  c = cmp(l.b, m.b);
  if (c != 0) return c < 0;
  return cmp(l.c, m.c) < 0;
}

namespace {
Line normalize_line(Int a, Int b, Int c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}
}  // namespace

Line line_through(const Pt& p, const Pt& q) {
  if (p == q) fail(Err::Degenerate, "line through coincident points " + pt_to_string(p));
  // a*x + b*y + c = 0 with (a, b) = rot90(q - p) cleared to integers.
  Rat ar = p.y - q.y, br = q.x - p.x;
  Rat cr = -(ar * p.x + br * p.y);
  Int m = ar.get_den();
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), br.get_den().get_mpz_t());
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), cr.get_den().get_mpz_t());
  Rat mr(m);
  return normalize_line(Rat(ar * mr).get_num(), Rat(br * mr).get_num(), Rat(cr * mr).get_num());
}

Line line_from_coeffs(const Rat& a, const Rat& b, const Rat& c) {
  if (sgn(a) == 0 && sgn(b) == 0) fail(Err::Degenerate, "line with a == b == 0");
  Int m = a.get_den();
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), b.get_den().get_mpz_t());
  mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den().get_mpz_t());
  Rat mr(m);
  return normalize_line(Rat(a * mr).get_num(), Rat(b * mr).get_num(), Rat(c * mr).get_num());
}

int side(const Line& l, const Pt& p) { return side(l, to_homo(p)); }

int side(const Line& l, const HPt& p) {
  Int v = l.a * p.X + l.b * p.Y + l.c * p.W;
  return sgn(v);
}

Rat line_eval(const Line& l, const Pt& p) { return Rat(l.a) * p.x + Rat(l.b) * p.y + Rat(l.c); }
bool on_line(const Line& l, const Pt& p) { return side(l, p) == 0; }
bool parallel(const Line& l, const Line& m) { return sgn(l.a * m.b - l.b * m.a) == 0; }

Pt line_meet(const Line& l, const Line& m) {
  Int d = l.a * m.b - l.b * m.a;
  if (sgn(d) == 0) fail(Err::Degenerate, "intersection of parallel lines");
  Int xn = l.b * m.c - l.c * m.b;
  Int yn = l.c * m.a - l.a * m.c;
  return {rat_of(xn, d), rat_of(yn, d)};
}

Pt point_on(const Line& l) {
  if (sgn(l.b) != 0) return {Rat(0), rat_of(-l.c, l.b)};
  return {rat_of(-l.c, l.a), Rat(0)};
}

Pt second_point_on(const Line& l) { return point_on(l) + direction(l); }
Pt direction(const Line& l) { return {Rat(l.b), Rat(-l.a)}; }

bool on_segment(const Pt& p, const Seg& s) {
  if (s.a == s.b) return p == s.a;
  if (orient(s.a, s.b, p) != 0) return false;
  Pt d = s.b - s.a;
  Rat t = dot(p - s.a, d);
  return sgn(t) >= 0 && t <= dot(d, d);
}

Hit seg_intersect(const Seg& s, const Seg& t) {
  const Hit miss{HitKind::Disjoint, {}};
  if (s.a == s.b && t.a == t.b)
    return s.a == t.a ? Hit{HitKind::Point, s.a} : miss;
  if (s.a == s.b) return on_segment(s.a, t) ? Hit{HitKind::Point, s.a} : miss;
  if (t.a == t.b) return on_segment(t.a, s) ? Hit{HitKind::Point, t.a} : miss;

  int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
  int o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: lexicographic order along the common line is a linear order.
    Pt slo = s.a, shi = s.b;
    if (lex_less(shi, slo)) std::swap(slo, shi);
    Pt tlo = t.a, thi = t.b;
    if (lex_less(thi, tlo)) std::swap(tlo, thi);
    const Pt& lo = lex_less(slo, tlo) ? tlo : slo;
    const Pt& hi = lex_less(shi, thi) ? shi : thi;
    if (lex_less(hi, lo)) return miss;
    if (hi == lo) return {HitKind::Point, lo};
    return {HitKind::Overlap, {}};
  }
  if (o1 == 0) return on_segment(t.a, s) ? Hit{HitKind::Point, t.a} : miss;
  if (o2 == 0) return on_segment(t.b, s) ? Hit{HitKind::Point, t.b} : miss;
  if (o3 == 0) return on_segment(s.a, t) ? Hit{HitKind::Point, s.a} : miss;
  if (o4 == 0) return on_segment(s.b, t) ? Hit{HitKind::Point, s.b} : miss;
  if (o1 != o2 && o3 != o4) {
    Pt p = line_meet(line_through(s.a, s.b), line_through(t.a, t.b));
    return {HitKind::Point, p};
  }
  return miss;
}

bool crosses_line(const Seg& e, const Line& l, Rat* t_out) {
  Rat va = line_eval(l, e.a), vb = line_eval(l, e.b);
  int sa = sgn(va), sb = sgn(vb);
  if (sa == 0 || sb == 0 || sa == sb) return false;
  if (t_out) *t_out = va / (va - vb);
  return true;
}

Affine affine_identity() { return {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}; }
bool is_identity(const Affine& f) { return f == affine_identity(); }

Pt apply(const Affine& f, const Pt& p) {
  return {f.m11 * p.x + f.m12 * p.y + f.t1, f.m21 * p.x + f.m22 * p.y + f.t2};
}

Rat det(const Affine& f) { return f.m11 * f.m22 - f.m12 * f.m21; }

Affine inverse(const Affine& f) {
  Rat d = det(f);
  if (sgn(d) == 0) fail(Err::SingularMatrix, "inverse of singular affine map");
  Rat i11 = f.m22 / d, i12 = -f.m12 / d, i21 = -f.m21 / d, i22 = f.m11 / d;
  return {i11, i12, i21, i22, -(i11 * f.t1 + i12 * f.t2), -(i21 * f.t1 + i22 * f.t2)};
}

Affine compose(const Affine& f, const Affine& g) {
  return {f.m11 * g.m11 + f.m12 * g.m21, f.m11 * g.m12 + f.m12 * g.m22,
          f.m21 * g.m11 + f.m22 * g.m21, f.m21 * g.m12 + f.m22 * g.m22,
          f.m11 * g.t1 + f.m12 * g.t2 + f.t1, f.m21 * g.t1 + f.m22 * g.t2 + f.t2};
}

Affine affine_from_triangles(const std::array<Pt, 3>& src, const std::array<Pt, 3>& dst) {
  Pt u = src[1] - src[0], v = src[2] - src[0];
  Rat d = cross(u, v);
  if (sgn(d) == 0) fail(Err::Degenerate, "affine_from_triangles: degenerate source triangle");
  Pt p = dst[1] - dst[0], q = dst[2] - dst[0];
  // Solve M*u = p, M*v = q by Cramer's rule.
  Rat m11 = (p.x * v.y - q.x * u.y) / d;
  Rat m12 = (q.x * u.x - p.x * v.x) / d;
  Rat m21 = (p.y * v.y - q.y * u.y) / d;
  Rat m22 = (q.y * u.x - p.y * v.x) / d;
  Rat t1 = dst[0].x - (m11 * src[0].x + m12 * src[0].y);
  Rat t2 = dst[0].y - (m21 * src[0].x + m22 * src[0].y);
  return {m11, m12, m21, m22, t1, t2};
}

}  // namespace acs
