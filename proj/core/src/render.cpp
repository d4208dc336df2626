#include "gofk/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace gofk {

namespace {

constexpr double kRadius = 110.0;
constexpr double kPitch = 300.0;
constexpr double kMargin = 40.0;

struct Point {
  double x;
  double y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

Point center(int cell) { return {kMargin + kRadius + kPitch * cell, kMargin + kRadius + 20.0}; }

// Corner k of a cell with n sides; counter-clockwise on screen.
Point corner(int cell, int k, int n) {
  const double a = std::numbers::pi / 2 + 2 * std::numbers::pi * k / n + std::numbers::pi / n;
  const Point c = center(cell);
  return {c.x + kRadius * std::cos(a), c.y - kRadius * std::sin(a)};
}

Point along(Point a, Point b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

}  // namespace

std::string render_svg(const StandardDiagram& d, const std::optional<NormalCurve>& curve) {
  const int ncells = static_cast<int>(d.cells().size());
  const double width = 2 * kMargin + kPitch * (ncells - 1) + 2 * kRadius;
  const double height = 2 * kMargin + 2 * kRadius + 60.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "<title>" << escape(d.manifold().str()) << "</title>\n";
  os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kMargin - 10) << "\" font-family=\"monospace\" font-size=\"14\">"
     << escape(d.manifold().str()) << "</text>\n";

  for (int c = 0; c < ncells; ++c) {
    const auto& sides = d.cells()[c].sides;
    const int n = static_cast<int>(sides.size());
    const Point mid = center(c);
    os << "<g id=\"cell" << c << "\">\n";
    os << "<text x=\"" << num(mid.x) << "\" y=\"" << num(mid.y + 4) << "\" text-anchor=\"middle\" font-family=\"monospace\" "
       << "font-size=\"11\" fill=\"#888\">" << c << "</text>\n";
    for (int k = 0; k < n; ++k) {
      const Point a = corner(c, k, n);
      const Point b = corner(c, (k + 1) % n, n);
      const Edge& e = d.edges()[sides[k].edge];
      const char* colour = e.is_free() ? "#999" : (e.v_letter && e.w_letter) ? "#7a3" : e.v_letter ? "#c33" : "#36c";
      os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
         << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
      const Point m = along(a, b, 0.5);
      const Point label = along(mid, m, 1.18);
      os << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y + 4) << "\" text-anchor=\"middle\" "
         << "font-family=\"monospace\" font-size=\"10\">" << escape(e.label) << " " << escape(d.carrier_tag({c, k}))
         << "</text>\n";
    }
    os << "</g>\n";
  }

  if (curve && !curve->empty()) {
    const auto w = edge_weights(*curve, d);
    auto slot_point = [&](int c, int side, int slot) {
      const int n = static_cast<int>(d.cells()[c].sides.size());
      const int ws = w[d.cells()[c].sides[side].edge];
      return along(corner(c, side, n), corner(c, (side + 1) % n, n), (slot + 1.0) / (ws + 1.0));
    };
    os << "<g id=\"curve\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\">\n";
    for (const auto& t : curve->transits()) {
      const Point a = slot_point(t.cell, t.in_side, t.in_slot);
      const Point b = slot_point(t.cell, t.out_side, t.out_slot);
      const Point bend = along(along(a, b, 0.5), center(t.cell), 0.5);
      os << "<polyline points=\"" << num(a.x) << "," << num(a.y) << " " << num(bend.x) << "," << num(bend.y) << " "
         << num(b.x) << "," << num(b.y) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gofk
