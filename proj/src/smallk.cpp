#include "wassign/smallk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wassign {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double point_spread(const Instance& inst) {
  double s = 0.0;
  for (const Point& p : inst.points) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return std::max(1.0, s);
}

// Clip a convex polygon by the halfplane a.x <= b (Sutherland-Hodgman).
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, Point a,
                                  double b, double eps) {
  std::vector<Point> out;
  const int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) {
    const Point p = poly[i], q = poly[(i + 1) % m];
    const double dp = dot(a, p) - b, dq = dot(a, q) - b;
    const bool in_p = dp <= eps, in_q = dq <= eps;
    if (in_p) out.push_back(p);
    if (in_p != in_q) {
      const double t = dp / (dp - dq);
      out.push_back(p + (q - p) * t);
    }
  }
  return out;
}

double polygon_area(const std::vector<Point>& poly) {
  double a = 0.0;
  const int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i) a += cross(poly[i], poly[(i + 1) % m]);
  return std::abs(a) / 2.0;
}

Point polygon_centroid(const std::vector<Point>& poly) {
  Point c{0.0, 0.0};
  for (const Point& p : poly) c = c + p;
  return c / static_cast<double>(poly.size());
}

void k_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<OrderKCell> order_k_subsets(const Instance& inst) {
  const int n = inst.n(), k = inst.k();
  const double scale = point_spread(inst);
  const double box = 1e6 * scale;
  const double eps = 1e-12 * scale * scale;

  Point c0{0.0, 0.0};
  for (const Point& p : inst.points) c0 = c0 + p;
  c0 = c0 / static_cast<double>(n);

  const std::vector<Point> box_poly = {{c0.x - box, c0.y - box},
                                       {c0.x + box, c0.y - box},
                                       {c0.x + box, c0.y + box},
                                       {c0.x - box, c0.y + box}};

  std::vector<OrderKCell> cells;
  k_subsets(n, k, [&](const std::vector<int>& subset) {
    std::vector<char> in(n, 0);
    for (int s : subset) in[s] = 1;
    std::vector<Point> poly = box_poly;
    for (int s : subset) {
      for (int t = 0; t < n && !poly.empty(); ++t) {
        if (in[t]) continue;
        // d(x, s) <= d(x, t)  <=>  2(t-s).x <= |t|^2 - |s|^2
        const Point ps = inst.points[s], pt = inst.points[t];
        const Point a = (pt - ps) * 2.0;
        const double b = dot(pt, pt) - dot(ps, ps);
        poly = clip_halfplane(poly, a, b, eps);
      }
    }
    if (poly.size() >= 3 && polygon_area(poly) > 1e-11 * scale * scale)
      cells.push_back({subset, polygon_centroid(poly)});
  });
  return cells;
}

FarthestPointStructure::FarthestPointStructure(const std::vector<Point>& pts)
    : points(pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    return pts[a].y < pts[b].y;
  });
  // Monotone chain. Collinear points stay on the chain; they are never the
  // unique farthest, but keeping them is harmless.
  auto extend = [&](std::vector<int>& h, int i) {
    while (h.size() >= 2 &&
           cross(pts[h.back()] - pts[h[h.size() - 2]],
                 pts[i] - pts[h[h.size() - 2]]) < 0.0)
      h.pop_back();
    h.push_back(i);
  };
  std::vector<int> lower, upper;
  for (int i : idx) extend(lower, i);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) extend(upper, *it);
  hull.assign(lower.begin(), lower.end() - (lower.size() > 1 ? 1 : 0));
  if (upper.size() > 1)
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
  if (hull.empty()) hull.push_back(idx[0]);
}

int FarthestPointStructure::query(Point q) const {
  double best = -1.0;
  for (int i : hull) best = std::max(best, dist2(points[i], q));
  int which = -1;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (dist2(points[i], q) == best) {
      which = i;
      break;
    }
  }
  return which;
}

int farthest_point(const std::vector<Point>& pts, Point q) {
  return FarthestPointStructure(pts).query(q);
}

Case1Result solve_case1(const Instance& inst) {
  const int n = inst.n(), k = inst.k();
  Case1Result out;
  out.r_upper = std::numeric_limits<double>::infinity();

  if (k == n) {
    out.best = solve_exact(inst);
    out.r_upper = out.best->radius;
    return out;
  }

  for (const OrderKCell& cell : order_k_subsets(inst)) {
    Instance sub;
    for (int s : cell.sites) sub.points.push_back(inst.points[s]);
    sub.weights = inst.weights;
    const SolveResult sr = solve_exact(sub);

    Assignment full;
    full.values.assign(n, 1.0);
    for (int i = 0; i < k; ++i)
      full.values[cell.sites[i]] = sr.assignment.values[i];

    double d_far = 0.0;
    {
      std::vector<Point> rest;
      for (int q = 0; q < n; ++q)
        if (std::find(cell.sites.begin(), cell.sites.end(), q) ==
            cell.sites.end())
          rest.push_back(inst.points[q]);
      if (!rest.empty()) {
        const FarthestPointStructure fps(rest);
        d_far = dist(rest[fps.query(sr.center)], sr.center);
      }
    }

    const double r_full = std::max(sr.radius, d_far);
    out.r_upper = std::min(out.r_upper, r_full);

    if (d_far <= sr.radius * (1.0 + 1e-12)) {
      SolveResult cand;
      cand.assignment = full;
      cand.center = sr.center;
      cand.radius = covering_radius(sr.center, inst, full);
      cand.determinators =
          determinator_indices(sr.center, inst, full, cand.radius);
      if (!out.best ||
          better_solution(cand.radius, cand.assignment.values, out.best->radius,
                          out.best->assignment.values))
        out.best = std::move(cand);
    }
  }
  return out;
}

std::optional<DecisionWitness> decide_on_boundary(int p, double r,
                                                  const Instance& inst) {
  const int n = inst.n();
  if (inst.k() == n) return std::nullopt;  // no unit weight to pin on p
  if (!(r > 0.0)) return std::nullopt;
  const Point pp = inst.points[p];

  // The center lies on C(p, r) and inside every disk D(q, r); collect the
  // angular breakpoints of those constraints.
  std::vector<double> angles;
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    const double d = dist(pp, inst.points[q]);
    if (d > 2.0 * r * (1.0 + kGeomTol)) return std::nullopt;
    if (d == 0.0) continue;
    const double theta =
        std::atan2(inst.points[q].y - pp.y, inst.points[q].x - pp.x);
    const double alpha = std::acos(std::clamp(d / (2.0 * r), -1.0, 1.0));
    angles.push_back(theta - alpha);
    angles.push_back(theta + alpha);
  }

  // Feasibility along the circle also flips where a scaled circle C(q, w*r)
  // crosses it.
  const auto w1 = sorted_w1(inst);
  const Circle cp{pp, r};
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    for (double w : distinct_values(w1)) {
      if (w == 1.0) continue;
      const Circle cq{inst.points[q], w * r};
      std::vector<Point> xs;
      try {
        xs = circle_intersections(cp, cq);
      } catch (const std::invalid_argument&) {
        continue;
      }
      for (const Point& x : xs)
        angles.push_back(std::atan2(x.y - pp.y, x.x - pp.x));
    }
  }

  std::vector<double> cand = angles;
  std::sort(angles.begin(), angles.end());
  if (angles.empty()) {
    cand.push_back(0.0);
  } else {
    for (size_t i = 0; i < angles.size(); ++i) {
      const double a = angles[i];
      const double b =
          i + 1 < angles.size() ? angles[i + 1] : angles[0] + kTwoPi;
      cand.push_back((a + b) / 2.0);
    }
  }

  for (double th : cand) {
    const Point c = pp + Point{std::cos(th), std::sin(th)} * r;
    if (auto a = validate_candidate(c, r, inst, {{p, 1.0}}))
      return DecisionWitness{c, *a, PointWeightPair{p, 1.0}};
  }
  return std::nullopt;
}

SolveResult solve_small_k(const Instance& inst) {
  validate_instance(inst);
  for (double w : inst.weights)
    if (w > 1.0)
      throw std::invalid_argument("small-k path requires weights <= 1");

  const int n = inst.n();
  bool coincide = true;
  for (const Point& p : inst.points)
    if (dist(p, inst.points[0]) > 0.0) coincide = false;
  if (n == 1 || coincide) {
    Assignment a;
    a.values = sorted_w1(inst);
    SolveResult res;
    res.assignment = a;
    res.center = inst.points[0];
    res.radius = 0.0;
    res.determinators = determinator_indices(res.center, inst, a, 0.0);
    return res;
  }

  const Case1Result c1 = solve_case1(inst);
  std::optional<SolveResult> best = c1.best;

  if (inst.k() < n) {
    // Case 2: some determinator keeps weight 1, so the optimal radius is an
    // event radius whose defining tuple involves weight 1.
    std::vector<double> radii;
    for (const auto& e : candidate_radii(inst)) {
      bool has_unit = false;
      for (const auto& pw : e.defining)
        if (pw.weight == 1.0) has_unit = true;
      if (has_unit && e.r_value <= c1.r_upper * (1.0 + 1e-9))
        radii.push_back(e.r_value);
    }
    std::sort(radii.begin(), radii.end());

    auto feasible = [&](double r) -> std::optional<DecisionWitness> {
      for (int p = 0; p < n; ++p)
        if (auto w = decide_on_boundary(p, r, inst)) return w;
      return std::nullopt;
    };

    if (!radii.empty()) {
      int lo = 0, hi = static_cast<int>(radii.size()) - 1;
      std::optional<DecisionWitness> wit = feasible(radii[hi]);
      if (wit) {
        while (lo < hi) {
          const int mid = lo + (hi - lo) / 2;
          if (auto w = feasible(radii[mid])) {
            wit = w;
            hi = mid;
          } else {
            lo = mid + 1;
          }
        }
        // Guard against a locally non-monotone predicate near ties.
        while (hi > 0) {
          if (auto w = feasible(radii[hi - 1])) {
            wit = w;
            --hi;
          } else {
            break;
          }
        }
        SolveResult cand;
        cand.assignment = wit->assignment;
        cand.center = wit->center;
        cand.radius = covering_radius(wit->center, inst, wit->assignment);
        cand.determinators =
            determinator_indices(wit->center, inst, wit->assignment, cand.radius);
        if (!best ||
            better_solution(cand.radius, cand.assignment.values, best->radius,
                            best->assignment.values))
          best = std::move(cand);
      }
    }
  }

  if (!best) throw std::logic_error("small-k solver found no solution");
  return *best;
}

}  // namespace wassign
