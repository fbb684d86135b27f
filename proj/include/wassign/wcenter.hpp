#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wassign/geom.hpp"

namespace wassign {

/// A problem instance: n points and a multiset of k weights (k <= n).
/// The remaining n-k points implicitly carry weight 1.
struct Instance {
  std::vector<Point> points;
  std::vector<double> weights;

  int n() const { return static_cast<int>(points.size()); }
  int k() const { return static_cast<int>(weights.size()); }
};

/// Throws std::invalid_argument if the instance violates its invariants.
void validate_instance(const Instance& inst);
bool has_duplicate_points(const Instance& inst);

/// Length-n weight vector: the multiset W on exactly k indices, 1 elsewhere.
struct Assignment {
  std::vector<double> values;
};

struct SolveResult {
  Assignment assignment;
  Point center;
  double radius = 0.0;
  std::vector<int> determinators;
};

/// W1 = W together with n-k copies of weight 1, nondecreasing.
std::vector<double> sorted_w1(const Instance& inst);

/// Distinct values of a nondecreasing list.
std::vector<double> distinct_values(const std::vector<double>& sorted);

/// True if a1 is a strictly better solution than a2: smaller radius, with
/// near-ties (1e-9 relative) broken by lexicographically smaller assignment.
bool better_solution(double r1, const std::vector<double>& a1, double r2,
                     const std::vector<double>& a2);

struct OneCenterResult {
  Point center;
  double radius = 0.0;
  std::vector<int> determinators;  // indices attaining the radius
};

/// Weighted 1-center of a fixed weighted point set, by candidate enumeration
/// over single points, pairs and triples.
OneCenterResult weighted_one_center(const std::vector<WeightedPoint>& pts);

using Anchor = std::pair<int, double>;  // (point index, weight from W1)

bool anchors_form_submultiset(const Instance& inst,
                              const std::vector<Anchor>& anchored);

/// Sorted greedy matching: non-anchored points by increasing distance from c
/// (ties by index) get the remaining W1 weights in increasing order.
Assignment greedy_assignment(Point c, const Instance& inst,
                             const std::vector<Anchor>& anchored);

/// Greedy assignment accepted iff every point satisfies d/w <= r(1+1e-12).
std::optional<Assignment> validate_candidate(Point c, double r,
                                             const Instance& inst,
                                             const std::vector<Anchor>& anchored);

/// Max weighted distance from c under the given assignment.
double covering_radius(Point c, const Instance& inst, const Assignment& a);

/// Indices attaining the covering radius within 1e-9 relative.
std::vector<int> determinator_indices(Point c, const Instance& inst,
                                      const Assignment& a, double radius);

}  // namespace wassign
