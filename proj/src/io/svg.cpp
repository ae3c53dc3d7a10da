#include "io/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace acs {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt6(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", d);
  return buf;
}

constexpr int kMargin = 40;

}  // namespace

SvgWindow window_of(const Polygon& p) {
  SvgWindow w{p.v[0].x, p.v[0].y, p.v[0].x, p.v[0].y};
  for (const Pt& q : p.v) {
    w.minx = rat_min(w.minx, q.x);
    w.maxx = rat_max(w.maxx, q.x);
    w.miny = rat_min(w.miny, q.y);
    w.maxy = rat_max(w.maxy, q.y);
  }
  return w;
}

SvgWindow window_of(const GenusRegion& g) { return window_of(g.outer); }

SvgWindow window_union(const SvgWindow& a, const SvgWindow& b) {
  return SvgWindow{rat_min(a.minx, b.minx), rat_min(a.miny, b.miny),
                   rat_max(a.maxx, b.maxx), rat_max(a.maxy, b.maxy)};
}

SvgWindow window_pad(const SvgWindow& w, const Rat& margin) {
  return SvgWindow{w.minx - margin, w.miny - margin, w.maxx + margin, w.maxy + margin};
}

SvgCanvas::SvgCanvas(const SvgWindow& window, int pixel_size) : w_(window), size_(pixel_size) {
  Rat dx = w_.maxx - w_.minx;
  Rat dy = w_.maxy - w_.miny;
  Rat span = rat_max(dx, dy);
  if (sgn(span) <= 0) span = rat(1);
  scale_ = rat(size_ - 2 * kMargin) / span;
}

std::string SvgCanvas::sx(const Rat& x) const {
  return rat_to_decimal(rat(kMargin) + (x - w_.minx) * scale_, 12);
}

std::string SvgCanvas::sy(const Rat& y) const {
  return rat_to_decimal(rat(size_ - kMargin) - (y - w_.miny) * scale_, 12);
}

std::string SvgCanvas::points_attr(const std::vector<Pt>& ring) const {
  std::string out;
  for (const Pt& p : ring) {
    if (!out.empty()) out += ' ';
    out += sx(p.x) + ',' + sy(p.y);
  }
  return out;
}

void SvgCanvas::add_polygon(const Polygon& p, const std::string& fill, const std::string& stroke,
                            bool dashed) {
  body_ += "<polygon points=\"" + points_attr(p.v) + "\" fill=\"" + fill + "\" stroke=\"" +
           stroke + "\" stroke-width=\"1.5\"" +
           (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
}

void SvgCanvas::add_region(const GenusRegion& g) {
  std::string d;
  auto ring_path = [&](const std::vector<Pt>& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i)
      d += (i == 0 ? "M " : "L ") + sx(ring[i].x) + ' ' + sy(ring[i].y) + ' ';
    d += "Z ";
  };
  ring_path(g.outer.v);
  for (const Polygon& w : g.windows) ring_path(w.v);
  body_ += "<path d=\"" + d + "\" fill=\"#cfd9ea\" fill-rule=\"evenodd\" stroke=\"#1f2430\" "
           "stroke-width=\"1.5\"/>\n";
}

void SvgCanvas::add_segment(const Pt& a, const Pt& b, const std::string& stroke, bool dashed) {
  body_ += "<line x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) + "\" x2=\"" + sx(b.x) + "\" y2=\"" +
           sy(b.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"1.2\"" +
           (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
}

void SvgCanvas::add_infinite_line(const Line& l, const std::string& stroke) {
  // intersections with the window border lines whose crossing point lies on
  // the border of the window
  std::vector<Pt> hits;
  auto consider = [&](const Line& border) {
    if (parallel(l, border)) return;
    Pt m = line_meet(l, border);
    if (m.x >= w_.minx && m.x <= w_.maxx && m.y >= w_.miny && m.y <= w_.maxy) {
      for (const Pt& h : hits)
        if (h == m) return;
      hits.push_back(m);
    }
  };
  consider(line_from_coeffs(rat(1), rat(0), -w_.minx));
  consider(line_from_coeffs(rat(1), rat(0), -w_.maxx));
  consider(line_from_coeffs(rat(0), rat(1), -w_.miny));
  consider(line_from_coeffs(rat(0), rat(1), -w_.maxy));
  if (hits.size() < 2) return;
  // extreme pair along the line direction
  Pt dir = direction(l);
  std::sort(hits.begin(), hits.end(), [&](const Pt& a, const Pt& b) { return dot(dir, a) < dot(dir, b); });
  add_segment(hits.front(), hits.back(), stroke, true);
}

void SvgCanvas::add_point(const Pt& p, const std::string& label) {
  body_ += "<circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) +
           "\" r=\"3\" fill=\"#1f2430\"/>\n";
  if (!label.empty())
    body_ += "<text x=\"" + sx(p.x) + "\" y=\"" + sy(p.y) +
             "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" font-size=\"12\">" +
             xml_escape(label) + "</text>\n";
}

void SvgCanvas::add_text(const Pt& at, const std::string& text) {
  body_ += "<text x=\"" + sx(at.x) + "\" y=\"" + sy(at.y) +
           "\" font-family=\"monospace\" font-size=\"14\">" + xml_escape(text) + "</text>\n";
}

std::string SvgCanvas::str() const {
  std::string s = std::to_string(size_);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s + ' ' + s +
         "\">\n<rect width=\"" + s + "\" height=\"" + s + "\" fill=\"white\"/>\n" + body_ +
         "</svg>\n";
}

std::string svg_polygon_frame(const Polygon& p, const SvgWindow& window) {
  SvgCanvas c(window);
  c.add_polygon(p, "#cfd9ea", "#1f2430");
  return c.str();
}

std::string svg_region_frame(const GenusRegion& g, const SvgWindow& window) {
  SvgCanvas c(window);
  c.add_region(g);
  return c.str();
}

std::string svg_plot_xy(const std::vector<std::pair<double, double>>& samples,
                        double reference_y, const std::string& title) {
  const int W = 640, H = 480, M = 50;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& [x, y] : samples) {
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  ymin = std::min(ymin, reference_y);
  ymax = std::max(ymax, reference_y);
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto px = [&](double x) { return fmt6(M + (x - xmin) / (xmax - xmin) * (W - 2 * M)); };
  auto py = [&](double y) { return fmt6(H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M)); };
  std::string b;
  b += "<line x1=\"" + px(xmin) + "\" y1=\"" + py(ymin) + "\" x2=\"" + px(xmax) + "\" y2=\"" +
       py(ymin) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  b += "<line x1=\"" + px(xmin) + "\" y1=\"" + py(ymin) + "\" x2=\"" + px(xmin) + "\" y2=\"" +
       py(ymax) + "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  b += "<line x1=\"" + px(xmin) + "\" y1=\"" + py(reference_y) + "\" x2=\"" + px(xmax) +
       "\" y2=\"" + py(reference_y) +
       "\" stroke=\"#b04030\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>\n";
  std::string poly;
  for (const auto& [x, y] : samples) {
    if (!poly.empty()) poly += ' ';
    poly += px(x) + ',' + py(y);
  }
  if (samples.size() > 1)
    b += "<polyline points=\"" + poly +
         "\" fill=\"none\" stroke=\"#2a5aa0\" stroke-width=\"1.5\"/>\n";
  for (const auto& [x, y] : samples)
    b += "<circle cx=\"" + px(x) + "\" cy=\"" + py(y) + "\" r=\"3\" fill=\"#2a5aa0\"/>\n";
  b += "<text x=\"" + fmt6(W / 2.0) +
       "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">" +
       xml_escape(title) + "</text>\n";
  b += "<text x=\"" + px(xmin) + "\" y=\"" + fmt6(H - M + 16.0) +
       "\" font-family=\"monospace\" font-size=\"11\">" + fmt6(xmin) + "</text>\n";
  b += "<text x=\"" + px(xmax) + "\" y=\"" + fmt6(H - M + 16.0) +
       "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + fmt6(xmax) +
       "</text>\n";
  b += "<text x=\"" + fmt6(M - 4.0) + "\" y=\"" + py(ymax) +
       "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + fmt6(ymax) +
       "</text>\n";
  b += "<text x=\"" + fmt6(M - 4.0) + "\" y=\"" + py(reference_y) +
       "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + fmt6(reference_y) +
       "</text>\n";
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(W) + "\" height=\"" + std::to_string(H) + "\" viewBox=\"0 0 " +
         std::to_string(W) + ' ' + std::to_string(H) + "\">\n<rect width=\"" +
         std::to_string(W) + "\" height=\"" + std::to_string(H) + "\" fill=\"white\"/>\n" + b +
         "</svg>\n";
}

}  // namespace acs
