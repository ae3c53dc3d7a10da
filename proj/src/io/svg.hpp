#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyalg/genus.hpp"

namespace acs {

// World-coordinate window rendered by a canvas; expand/union helpers keep a
// frame sequence on one common window so animations do not rescale.
struct SvgWindow {
  Rat minx, miny, maxx, maxy;
};

SvgWindow window_of(const Polygon& p);
SvgWindow window_of(const GenusRegion& g);
SvgWindow window_union(const SvgWindow& a, const SvgWindow& b);
SvgWindow window_pad(const SvgWindow& w, const Rat& margin);

// Deterministic SVG 1.1 builder.  All coordinates pass through the exact
// rational-to-decimal renderer at 12 significant digits, so identical inputs
// produce identical bytes.  Rendering only — nothing is parsed back.
class SvgCanvas {
 public:
  explicit SvgCanvas(const SvgWindow& window, int pixel_size = 640);

  void add_polygon(const Polygon& p, const std::string& fill, const std::string& stroke,
                   bool dashed = false);
  void add_region(const GenusRegion& g);  // shaded outer, white windows
  void add_segment(const Pt& a, const Pt& b, const std::string& stroke, bool dashed = false);
  void add_infinite_line(const Line& l, const std::string& stroke);  // clipped, dashed
  void add_point(const Pt& p, const std::string& label);
  void add_text(const Pt& at, const std::string& text);

  std::string str() const;  // complete SVG document

 private:
  std::string sx(const Rat& x) const;
  std::string sy(const Rat& y) const;
  std::string points_attr(const std::vector<Pt>& ring) const;

  SvgWindow w_;
  int size_;
  Rat scale_;
  std::string body_;
};

std::string svg_polygon_frame(const Polygon& p, const SvgWindow& window);
std::string svg_region_frame(const GenusRegion& g, const SvgWindow& window);

// Scatter of (x, y) samples with a dashed horizontal reference level; used
// for the growth-versus-size experiment tables.
std::string svg_plot_xy(const std::vector<std::pair<double, double>>& samples,
                        double reference_y, const std::string& title);

}  // namespace acs
