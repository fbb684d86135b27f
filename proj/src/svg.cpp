#include "wassign/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "wassign/instances.hpp"

namespace wassign {

namespace {

struct Mapper {
  double scale;
  Point origin;  // world coordinate of the canvas top-left
  double size;

  Point to_canvas(Point w) const {
    return {(w.x - origin.x) * scale, (origin.y - w.y) * scale};
  }
};

std::string fmt(double v) {
  // Two decimals are plenty for pixel coordinates and keep the output stable.
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const RenderOptions& opts,
                       const SolveResult* solution) {
  double lo_x = inst.points[0].x, hi_x = lo_x;
  double lo_y = inst.points[0].y, hi_y = lo_y;
  auto grow = [&](Point p, double r) {
    lo_x = std::min(lo_x, p.x - r);
    hi_x = std::max(hi_x, p.x + r);
    lo_y = std::min(lo_y, p.y - r);
    hi_y = std::max(hi_y, p.y + r);
  };
  for (const Point& p : inst.points) grow(p, 0.0);
  if (opts.circle_radius) {
    const auto w1 = sorted_w1(inst);
    const double wmax = w1.back();
    for (const Point& p : inst.points) grow(p, wmax * *opts.circle_radius);
  }
  if (solution && opts.draw_solution) grow(solution->center, solution->radius);

  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 0.06 * span;
  const double world = span + 2.0 * margin;
  Mapper m;
  m.size = opts.size;
  m.scale = opts.size / world;
  m.origin = {(lo_x + hi_x) / 2.0 - world / 2.0,
              (lo_y + hi_y) / 2.0 + world / 2.0};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size
      << "\" height=\"" << opts.size << "\" viewBox=\"0 0 " << opts.size << " "
      << opts.size << "\">\n";
  out << "<rect width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" fill=\"white\"/>\n";

  auto circle = [&](Point c, double world_r, const char* stroke,
                    const char* fill, double width) {
    const Point cc = m.to_canvas(c);
    out << "<circle cx=\"" << fmt(cc.x) << "\" cy=\"" << fmt(cc.y)
        << "\" r=\"" << fmt(world_r * m.scale) << "\" stroke=\"" << stroke
        << "\" fill=\"" << fill << "\" stroke-width=\"" << fmt(width)
        << "\"/>\n";
  };

  if (opts.circle_radius) {
    const auto vals = distinct_values(sorted_w1(inst));
    for (const Point& p : inst.points)
      for (double w : vals)
        circle(p, w * *opts.circle_radius, "#b0c4de", "none", 1.0);
  }

  if (solution && opts.draw_solution) {
    circle(solution->center, solution->radius, "#d62728", "none", 1.5);
    const Point cc = m.to_canvas(solution->center);
    out << "<path d=\"M" << fmt(cc.x - 5) << " " << fmt(cc.y) << " H"
        << fmt(cc.x + 5) << " M" << fmt(cc.x) << " " << fmt(cc.y - 5) << " V"
        << fmt(cc.y + 5) << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }

  std::vector<char> is_det(inst.n(), 0);
  if (solution)
    for (int d : solution->determinators) is_det[d] = 1;
  for (int i = 0; i < inst.n(); ++i) {
    const bool weighted =
        solution && solution->assignment.values.size() == inst.points.size() &&
        solution->assignment.values[i] != 1.0;
    const char* fill = weighted ? "#1f77b4" : "#333333";
    const Point cc = m.to_canvas(inst.points[i]);
    out << "<circle cx=\"" << fmt(cc.x) << "\" cy=\"" << fmt(cc.y)
        << "\" r=\"" << (is_det[i] ? "5" : "3.5") << "\" fill=\"" << fill
        << "\"" << (is_det[i] ? " stroke=\"#d62728\" stroke-width=\"1.5\"" : "")
        << "/>\n";
    if (weighted) {
      out << "<text x=\"" << fmt(cc.x + 6) << "\" y=\"" << fmt(cc.y - 6)
          << "\" font-size=\"11\" font-family=\"sans-serif\">"
          << format_double(solution->assignment.values[i]) << "</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace wassign
