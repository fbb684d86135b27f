#pragma once

#include <optional>

#include "wassign/wcenter.hpp"

namespace wassign {

struct PointWeightPair {
  int point_index = 0;
  double weight = 1.0;  // a value of W1
};

/// A maximal arc of C_{p,w}(r) not crossed by any other scaled circle, or a
/// zero-length piece at a crossing/tangency point (start == end).
struct IntervalOnCircle {
  Circle circle;
  double start_angle = 0.0;
  double end_angle = 0.0;
  Point representative;
};

struct DecisionWitness {
  Point center;
  Assignment assignment;
  PointWeightPair tight_pair;  // d(point, center) = r * weight
};

/// Incremental sweep state over the intervals of one circle. Points other
/// than the anchored one are kept sorted by pi (their smallest feasible
/// weight bucket); up_ptr[b] is the last position occupied by bucket <= b.
struct CircleSweepState {
  std::vector<double> bucket_values;  // distinct weights of W1 minus anchor
  std::vector<int> first_index;       // 1-based first W1-position per bucket
  std::vector<int> order;             // other point indices sorted by bucket
  std::vector<int> pos;               // inverse of order (indexed by point)
  std::vector<int> bucket;            // per point; t = sentinel (none fits)
  std::vector<int> up_ptr;            // cumulative last position per bucket
  int violations = 0;                 // positions with pi(q_l) > l
};

struct SweepOutcome {
  std::vector<IntervalOnCircle> intervals;  // walk order: arcs and event points
  std::vector<char> feasible;               // parallel to intervals
  std::optional<DecisionWitness> witness;   // from the first feasible interval
};

/// Arcs of C_{p,w}(r) induced by the intersections with the circles
/// C_{q,w'}(r) for q != p and distinct w' of W1 minus one copy of w.
std::vector<IntervalOnCircle> circle_intervals(const PointWeightPair& pair,
                                               double r, const Instance& inst);

/// Full sweep over all intervals (arcs and event points) of one circle.
/// full_verify re-derives the state from scratch at every arc and throws
/// std::logic_error on any disagreement.
SweepOutcome sweep_circle_full(const PointWeightPair& pair, double r,
                               const Instance& inst, bool full_verify = false,
                               bool early_exit = false);

/// First feasible interval's witness on C_{p,w}(r), if any.
std::optional<DecisionWitness> sweep_circle(const PointWeightPair& pair,
                                            double r, const Instance& inst);

/// Is there an assignment f with covering radius r(f) <= r?
std::optional<DecisionWitness> decide(const Instance& inst, double r);

}  // namespace wassign
