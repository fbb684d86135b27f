#pragma once

#include "wassign/wcenter.hpp"

namespace wassign {

struct OracleResult {
  SolveResult best;
  std::vector<double> all_radii;  // one covering radius per enumerated assignment
};

/// Number of distinct assignments of W to the instance's points.
double distinct_assignment_count(const Instance& inst);

/// Ground truth: enumerate every distinct assignment, take the weighted
/// 1-center of each, return the minimum (ties broken lexicographically).
/// Throws std::runtime_error("oracle scale exceeded") beyond 1e6 assignments.
OracleResult brute_force_solve(const Instance& inst);

}  // namespace wassign
