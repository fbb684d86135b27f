#pragma once

#include "wassign/optimizer.hpp"

namespace wassign {

/// A nonempty cell of the order-k Voronoi diagram: the region whose k nearest
/// sites are exactly `sites`, witnessed by an interior point.
struct OrderKCell {
  std::vector<int> sites;
  Point witness;
};

/// All nonempty order-k cells, one per k-subset with nonempty interior,
/// computed by halfplane clipping of a bounding box.
std::vector<OrderKCell> order_k_subsets(const Instance& inst);

/// Farthest-point queries over a fixed point set; ties resolved to the
/// lowest index.
struct FarthestPointStructure {
  std::vector<Point> points;
  std::vector<int> hull;  // indices of hull vertices, counterclockwise

  explicit FarthestPointStructure(const std::vector<Point>& pts);
  int query(Point q) const;  // index of the farthest point from q
};

int farthest_point(const std::vector<Point>& pts, Point q);

/// Case 1 of the small-k solver: every determinator carries a weight of W.
/// Returns the best such solution (if any) and the upper bound r_U.
struct Case1Result {
  std::optional<SolveResult> best;
  double r_upper = 0.0;  // +infinity when no cell yields a valid solution
};
Case1Result solve_case1(const Instance& inst);

/// Case 2 decision: is there a feasible center at distance exactly r from
/// point p (which keeps weight 1), i.e. on the boundary of the intersection
/// of the disks D(q, r) over all unit-weight-capable points q?
std::optional<DecisionWitness> decide_on_boundary(int p, double r,
                                                  const Instance& inst);

/// Exact optimum for instances with all weights in (0, 1]. Throws
/// std::invalid_argument("small-k path requires weights <= 1") otherwise.
SolveResult solve_small_k(const Instance& inst);

}  // namespace wassign
