#include "wassign/wcenter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wassign {

void validate_instance(const Instance& inst) {
  if (inst.points.empty()) throw std::invalid_argument("instance has no points");
  if (inst.weights.empty()) throw std::invalid_argument("instance has no weights");
  if (inst.k() > inst.n()) throw std::invalid_argument("more weights than points");
  for (const Point& p : inst.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("non-finite point coordinate");
  }
  for (double w : inst.weights) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("weights must be positive and finite");
  }
}

bool has_duplicate_points(const Instance& inst) {
  for (size_t i = 0; i < inst.points.size(); ++i)
    for (size_t j = i + 1; j < inst.points.size(); ++j)
      if (inst.points[i].x == inst.points[j].x &&
          inst.points[i].y == inst.points[j].y)
        return true;
  return false;
}

std::vector<double> sorted_w1(const Instance& inst) {
  std::vector<double> w1 = inst.weights;
  w1.resize(inst.points.size(), 1.0);
  std::sort(w1.begin(), w1.end());
  return w1;
}

std::vector<double> distinct_values(const std::vector<double>& sorted) {
  std::vector<double> out;
  for (double v : sorted)
    if (out.empty() || v != out.back()) out.push_back(v);
  return out;
}

bool better_solution(double r1, const std::vector<double>& a1, double r2,
                     const std::vector<double>& a2) {
  const double tol = 1e-9 * std::max({1.0, r1, r2});
  if (std::abs(r1 - r2) <= tol) return a1 < a2;
  return r1 < r2;
}

namespace {

double max_weighted_distance(const std::vector<WeightedPoint>& pts, Point c) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, weighted_distance(p, c));
  return m;
}

}  // namespace

OneCenterResult weighted_one_center(const std::vector<WeightedPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  const int m = static_cast<int>(pts.size());

  Point best = pts[0].point;
  double best_r = max_weighted_distance(pts, best);

  auto consider = [&](Point c) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) return;
    const double r = max_weighted_distance(pts, c);
    if (r < best_r) {
      best_r = r;
      best = c;
    }
  };

  for (int i = 1; i < m; ++i) consider(pts[i].point);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto cand = weighted_center_of_pair(pts[i], pts[j]);
      if (!cand.degenerate) consider(cand.center);
      for (int l = j + 1; l < m; ++l) {
        for (const auto& e : equidistant_points_of_triple(pts[i], pts[j], pts[l]))
          consider(e.center);
      }
    }
  }

  OneCenterResult res;
  res.center = best;
  res.radius = best_r;
  const double tol = 1e-9 * (1.0 + best_r);
  for (int i = 0; i < m; ++i)
    if (std::abs(weighted_distance(pts[i], best) - best_r) <= tol)
      res.determinators.push_back(i);
  return res;
}

bool anchors_form_submultiset(const Instance& inst,
                              const std::vector<Anchor>& anchored) {
  std::vector<double> rem = sorted_w1(inst);
  for (const auto& [idx, w] : anchored) {
    (void)idx;
    auto it = std::lower_bound(rem.begin(), rem.end(), w);
    if (it == rem.end() || *it != w) return false;
    rem.erase(it);
  }
  for (size_t i = 0; i < anchored.size(); ++i)
    for (size_t j = i + 1; j < anchored.size(); ++j)
      if (anchored[i].first == anchored[j].first) return false;
  return true;
}

Assignment greedy_assignment(Point c, const Instance& inst,
                             const std::vector<Anchor>& anchored) {
  const int n = inst.n();
  std::vector<double> rem = sorted_w1(inst);
  std::vector<char> is_anchored(n, 0);
  Assignment a;
  a.values.assign(n, 0.0);

  for (const auto& [idx, w] : anchored) {
    auto it = std::lower_bound(rem.begin(), rem.end(), w);
    if (it == rem.end() || *it != w)
      throw std::invalid_argument("anchor weight not available in W1");
    rem.erase(it);
    if (idx < 0 || idx >= n || is_anchored[idx])
      throw std::invalid_argument("bad anchor index");
    is_anchored[idx] = 1;
    a.values[idx] = w;
  }

  std::vector<int> free_idx;
  for (int i = 0; i < n; ++i)
    if (!is_anchored[i]) free_idx.push_back(i);
  std::stable_sort(free_idx.begin(), free_idx.end(), [&](int i, int j) {
    const double di = dist(inst.points[i], c), dj = dist(inst.points[j], c);
    if (di != dj) return di < dj;
    return i < j;
  });
  for (size_t t = 0; t < free_idx.size(); ++t) a.values[free_idx[t]] = rem[t];
  return a;
}

std::optional<Assignment> validate_candidate(Point c, double r,
                                             const Instance& inst,
                                             const std::vector<Anchor>& anchored) {
  Assignment a = greedy_assignment(c, inst, anchored);
  const double bound = r * (1.0 + 1e-12);
  for (int i = 0; i < inst.n(); ++i) {
    if (dist(inst.points[i], c) > bound * a.values[i]) return std::nullopt;
  }
  return a;
}

double covering_radius(Point c, const Instance& inst, const Assignment& a) {
  double m = 0.0;
  for (int i = 0; i < inst.n(); ++i)
    m = std::max(m, dist(inst.points[i], c) / a.values[i]);
  return m;
}

std::vector<int> determinator_indices(Point c, const Instance& inst,
                                      const Assignment& a, double radius) {
  std::vector<int> out;
  const double tol = 1e-9 * (1.0 + radius);
  for (int i = 0; i < inst.n(); ++i)
    if (std::abs(dist(inst.points[i], c) / a.values[i] - radius) <= tol)
      out.push_back(i);
  return out;
}

}  // namespace wassign
