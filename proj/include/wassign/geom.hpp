#pragma once

#include <cmath>
#include <vector>

namespace wassign {

// Relative tolerance used by the geometric predicates.
constexpr double kGeomTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}
inline Point perp(Point a) { return {-a.y, a.x}; }

struct WeightedPoint {
  Point point;
  double weight = 1.0;
};

struct Circle {
  Point center;
  double radius = 0.0;  // radius 0 is a legal point-circle
};

/// Distance from q to p.point divided by p.weight.
double weighted_distance(const WeightedPoint& p, Point q);

/// Common points of two circles: 0, 1 (tangency, snapped) or 2 points.
/// Throws std::invalid_argument("coincident circles") for identical circles
/// of positive radius.
std::vector<Point> circle_intersections(const Circle& a, const Circle& b);

struct CenterCandidate {
  Point center;
  double radius = 0.0;
  bool degenerate = false;  // coincident input points
};

/// Point c on segment ab with d(a,c)/w_a = d(b,c)/w_b = radius.
CenterCandidate weighted_center_of_pair(const WeightedPoint& a,
                                        const WeightedPoint& b);

/// All points equidistant (in weighted distance) from three weighted points,
/// found by intersecting two multiplicative bisectors.
std::vector<CenterCandidate> equidistant_points_of_triple(
    const WeightedPoint& a, const WeightedPoint& b, const WeightedPoint& c);

/// True iff c lies in the closed convex hull of the three points; for an
/// equidistant point this makes c the weighted 1-center of the triple.
bool is_center_of_triple(Point c, const WeightedPoint& a,
                         const WeightedPoint& b, const WeightedPoint& cc);

}  // namespace wassign
