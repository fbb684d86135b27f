#pragma once

#include <functional>

#include "wassign/decision.hpp"

namespace wassign {

/// A radius at which the combinatorial structure of the growing circle
/// arrangement changes: two circles become tangent or three concurrent.
struct CandidateEvent {
  double r_value = 0.0;
  enum class Kind { PairTangency, TripleConcurrency } kind = Kind::PairTangency;
  std::vector<PointWeightPair> defining;  // 2 or 3 pairs
};

/// Radii at which C_{a}(r) and C_{b}(r) are tangent: d/(w_a+w_b) and, for
/// unequal weights, d/|w_a-w_b|. Ascending.
std::vector<double> pair_event_rvalues(const PointWeightPair& a,
                                       const PointWeightPair& b,
                                       const Instance& inst);

/// Radii at which the three circles share a common point.
std::vector<double> triple_event_rvalues(const PointWeightPair& a,
                                         const PointWeightPair& b,
                                         const PointWeightPair& c,
                                         const Instance& inst);

/// All pair and triple events over point x distinct-weight pairs, ascending,
/// radii deduplicated at 1e-12 relative.
std::vector<CandidateEvent> candidate_radii(const Instance& inst);

struct RInterval {
  double lo = 0.0;  // -infinity when never bracketed below
  double hi = 0.0;  // +infinity when the oracle never answered feasible
  bool lo_feasible = false;
  bool hi_feasible = true;
};

struct MultilistStats {
  int oracle_calls = 0;
  int iterations = 0;
};

/// Weighted-median-of-medians search: locates the interval between
/// consecutive values of the union of all lists that contains the monotone
/// oracle's threshold, discarding at least a quarter of the remaining values
/// per oracle call.
RInterval multilist_interval_search(
    const std::vector<std::function<std::vector<double>()>>& lists,
    const std::function<bool(double)>& oracle, MultilistStats* stats = nullptr);

/// Exact optimum by validating every candidate event against Lemma-2.
SolveResult solve_exact(const Instance& inst);

/// Exact optimum by oracle search over candidate radii (identical result).
SolveResult solve_parametric(const Instance& inst);

}  // namespace wassign
