#pragma once

#include "geom/rational.hpp"

#include <array>
#include <vector>

namespace acs {

struct Pt {
  Rat x, y;
  bool operator==(const Pt&) const = default;
};

bool lex_less(const Pt& a, const Pt& b);
struct PtLess {
  bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

Pt operator+(const Pt& a, const Pt& b);
Pt operator-(const Pt& a, const Pt& b);
Pt scale(const Rat& k, const Pt& p);
Pt midpoint(const Pt& a, const Pt& b);
Pt rot90(const Pt& p);  // counterclockwise quarter turn of a vector
Rat dot(const Pt& a, const Pt& b);
Rat cross(const Pt& a, const Pt& b);

// Orientation of the triple (o, a, b): +1 counterclockwise, 0 collinear.
int orient(const Pt& o, const Pt& a, const Pt& b);
bool collinear(const Pt& a, const Pt& b, const Pt& c);
std::string pt_to_string(const Pt& p);

// Homogeneous integer form (x, y) == (X/W, Y/W), W > 0.  Lets hot loops run
// on integer arithmetic only.
struct HPt {
  Int X, Y, W;
};
HPt to_homo(const Pt& p);

// Line a*x + b*y + c == 0.  Normalized: integer coefficients with content 1,
// first nonzero of (a, b) positive.  side() > 0 is the "left" half-plane.
struct Line {
  Int a, b, c;
  bool operator==(const Line&) const = default;
};

bool line_less(const Line& l, const Line& m);
struct LineLess {
  bool operator()(const Line& l, const Line& m) const { return line_less(l, m); }
};

Line line_through(const Pt& p, const Pt& q);                       // p != q
Line line_from_coeffs(const Rat& a, const Rat& b, const Rat& c);   // (a,b) != 0
int side(const Line& l, const Pt& p);
int side(const Line& l, const HPt& p);
Rat line_eval(const Line& l, const Pt& p);
bool on_line(const Line& l, const Pt& p);
bool parallel(const Line& l, const Line& m);
Pt line_meet(const Line& l, const Line& m);  // unique intersection point
Pt point_on(const Line& l);
Pt second_point_on(const Line& l);
Pt direction(const Line& l);  // (b, -a)

struct Seg {
  Pt a, b;  // degenerate (a == b) allowed
};

bool on_segment(const Pt& p, const Seg& s);  // closed segment membership

enum class HitKind { Disjoint, Point, Overlap };
struct Hit {
  HitKind kind;
  Pt p;  // meaningful only when kind == Point
};
Hit seg_intersect(const Seg& s, const Seg& t);

// If the open interior of edge `e` crosses line `l` transversally, the
// parameter t in (0,1) with e.a + t*(e.b - e.a) on l.
bool crosses_line(const Seg& e, const Line& l, Rat* t_out);

struct Affine {
  Rat m11, m12, m21, m22, t1, t2;
  bool operator==(const Affine&) const = default;
};

Affine affine_identity();
bool is_identity(const Affine& f);
Pt apply(const Affine& f, const Pt& p);
Rat det(const Affine& f);
Affine inverse(const Affine& f);  // SingularMatrix if det == 0
Affine compose(const Affine& f, const Affine& g);  // x -> f(g(x))
// Unique affine map sending src[i] -> dst[i]; src must be non-degenerate.
Affine affine_from_triangles(const std::array<Pt, 3>& src, const std::array<Pt, 3>& dst);

}  // namespace acs
