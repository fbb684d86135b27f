#include "wassign/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace wassign {

double weighted_distance(const WeightedPoint& p, Point q) {
  return dist(p.point, q) / p.weight;
}

std::vector<Point> circle_intersections(const Circle& a, const Circle& b) {
  const double d = dist(a.center, b.center);
  const double scale = std::max({a.radius, b.radius, d, 1.0});
  const double tol = kGeomTol * scale;

  if (d <= tol && std::abs(a.radius - b.radius) <= tol) {
    if (a.radius <= tol) return {a.center};  // two point-circles in one spot
    throw std::invalid_argument("coincident circles");
  }
  if (d <= tol) return {};  // concentric, distinct radii

  const Point u = (b.center - a.center) / d;
  const double m = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);

  // Tangency snapping: collapse to a single point on the center line.
  if (std::abs(d - (a.radius + b.radius)) <= tol ||
      std::abs(d - std::abs(a.radius - b.radius)) <= tol) {
    return {a.center + u * m};
  }
  if (d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) return {};

  double h2 = a.radius * a.radius - m * m;
  if (h2 < 0.0) h2 = 0.0;
  const double h = std::sqrt(h2);
  const Point base = a.center + u * m;
  const Point v = perp(u);
  return {base + v * h, base - v * h};
}

CenterCandidate weighted_center_of_pair(const WeightedPoint& a,
                                        const WeightedPoint& b) {
  const double d = dist(a.point, b.point);
  if (d == 0.0) return {a.point, 0.0, true};
  const double s = a.weight + b.weight;
  const double t = a.weight / s;
  return {a.point + (b.point - a.point) * t, d / s, false};
}

namespace {

// Multiplicative bisector of two weighted points: a perpendicular bisector
// line for equal weights, an Apollonius circle otherwise.
struct Bisector {
  bool is_line = false;
  bool degenerate = false;  // coincident equal-weight points: whole plane
  Point line_point;
  Point line_dir;  // unit
  Circle circle;
};

Bisector bisector_of(const WeightedPoint& a, const WeightedPoint& b) {
  Bisector bi;
  const double u = a.weight, v = b.weight;
  if (std::abs(u - v) <= 1e-12 * (u + v)) {
    if (dist(a.point, b.point) == 0.0) {
      bi.degenerate = true;
      return bi;
    }
    bi.is_line = true;
    bi.line_point = (a.point + b.point) * 0.5;
    Point dir = perp(b.point - a.point);
    bi.line_dir = dir / norm(dir);
    return bi;
  }
  const double denom = v * v - u * u;
  bi.circle.center = (a.point * (v * v) - b.point * (u * u)) / denom;
  bi.circle.radius = u * v * dist(a.point, b.point) / std::abs(denom);
  return bi;
}

std::vector<Point> line_line(const Bisector& a, const Bisector& b) {
  const double det = cross(a.line_dir, b.line_dir);
  if (std::abs(det) <= 1e-14) return {};
  const Point d = b.line_point - a.line_point;
  const double t = cross(d, b.line_dir) / det;
  return {a.line_point + a.line_dir * t};
}

std::vector<Point> line_circle(const Bisector& line, const Circle& c) {
  const Point d = c.center - line.line_point;
  const double t0 = dot(d, line.line_dir);
  const Point foot = line.line_point + line.line_dir * t0;
  const double g = dist(foot, c.center);
  const double tol = kGeomTol * std::max(c.radius, 1.0);
  if (g > c.radius + tol) return {};
  double h2 = c.radius * c.radius - g * g;
  if (h2 <= tol * tol) return {foot};
  const double h = std::sqrt(h2);
  return {foot + line.line_dir * h, foot - line.line_dir * h};
}

std::vector<Point> intersect_bisectors(const Bisector& a, const Bisector& b) {
  if (a.degenerate || b.degenerate) return {};  // pair machinery covers these
  if (a.is_line && b.is_line) return line_line(a, b);
  if (a.is_line) return line_circle(a, b.circle);
  if (b.is_line) return line_circle(b, a.circle);
  try {
    return circle_intersections(a.circle, b.circle);
  } catch (const std::invalid_argument&) {
    return {};  // coincident bisector circles: degenerate triple
  }
}

// One damped Newton step toward d(a,x)/wa = d(b,x)/wb = d(c,x)/wc.
Point polish_equidistant(Point x, const WeightedPoint& a,
                         const WeightedPoint& b, const WeightedPoint& c) {
  for (int it = 0; it < 3; ++it) {
    const double da = dist(a.point, x), db = dist(b.point, x),
                 dc = dist(c.point, x);
    if (da < 1e-14 || db < 1e-14 || dc < 1e-14) return x;
    const double f1 = da / a.weight - db / b.weight;
    const double f2 = da / a.weight - dc / c.weight;
    const Point ga = (x - a.point) / (da * a.weight);
    const Point gb = (x - b.point) / (db * b.weight);
    const Point gc = (x - c.point) / (dc * c.weight);
    const Point r1 = ga - gb, r2 = ga - gc;
    const double det = cross(r1, r2);
    if (std::abs(det) < 1e-14) return x;
    const double dx = (f1 * r2.y - f2 * r1.y) / det;
    const double dy = (f2 * r1.x - f1 * r2.x) / det;
    x = {x.x - dx, x.y - dy};
  }
  return x;
}

}  // namespace

std::vector<CenterCandidate> equidistant_points_of_triple(
    const WeightedPoint& a, const WeightedPoint& b, const WeightedPoint& c) {
  auto cands = intersect_bisectors(bisector_of(a, b), bisector_of(a, c));
  std::vector<CenterCandidate> out;
  for (Point x : cands) {
    x = polish_equidistant(x, a, b, c);
    const double r1 = weighted_distance(a, x);
    const double r2 = weighted_distance(b, x);
    const double r3 = weighted_distance(c, x);
    const double r = (r1 + r2 + r3) / 3.0;
    const double res = std::max({std::abs(r1 - r), std::abs(r2 - r), std::abs(r3 - r)});
    if (!std::isfinite(x.x) || !std::isfinite(x.y) || !std::isfinite(r)) continue;
    if (res > 1e-6 * (1.0 + r)) continue;
    bool dup = false;
    for (const auto& o : out) {
      if (dist(o.center, x) <= kGeomTol * (1.0 + norm(x))) dup = true;
    }
    if (!dup) out.push_back({x, r, false});
  }
  return out;
}

bool is_center_of_triple(Point c, const WeightedPoint& a,
                         const WeightedPoint& b, const WeightedPoint& cc) {
  const Point A = a.point, B = b.point, C = cc.point;
  const double scale = std::max({1.0, dist(A, B), dist(B, C), dist(C, A)});
  const double tol = kGeomTol * scale * scale;
  const double area = cross(B - A, C - A);
  if (std::abs(area) <= tol) {
    // Degenerate triangle: hull is a segment; test c against each edge.
    auto on_segment = [&](Point p, Point q) {
      if (std::abs(cross(q - p, c - p)) > tol) return false;
      const double t = dot(c - p, q - p);
      return t >= -tol && t <= dist2(p, q) + tol;
    };
    return on_segment(A, B) || on_segment(B, C) || on_segment(C, A);
  }
  const double sgn = area > 0 ? 1.0 : -1.0;
  return sgn * cross(B - A, c - A) >= -tol &&
         sgn * cross(C - B, c - B) >= -tol &&
         sgn * cross(A - C, c - C) >= -tol;
}

}  // namespace wassign
