#include "wassign/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wassign {

double distinct_assignment_count(const Instance& inst) {
  const int n = inst.n(), k = inst.k();
  double count = 1.0;
  for (int i = 0; i < k; ++i) count *= static_cast<double>(n - i);
  std::map<double, int> mult;
  for (double w : inst.weights) ++mult[w];
  for (const auto& [w, m] : mult) {
    (void)w;
    for (int i = 2; i <= m; ++i) count /= i;
  }
  return count;
}

OracleResult brute_force_solve(const Instance& inst) {
  validate_instance(inst);
  const int n = inst.n(), k = inst.k();
  if (distinct_assignment_count(inst) > 1e6)
    throw std::runtime_error("oracle scale exceeded");

  OracleResult out;
  bool have_best = false;

  // Lexicographic combinations of k indices.
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;

  std::vector<double> w_sorted = inst.weights;
  std::sort(w_sorted.begin(), w_sorted.end());

  std::vector<WeightedPoint> pts(n);
  for (int i = 0; i < n; ++i) pts[i].point = inst.points[i];

  while (true) {
    std::vector<double> perm = w_sorted;
    do {
      Assignment a;
      a.values.assign(n, 1.0);
      for (int i = 0; i < k; ++i) a.values[comb[i]] = perm[i];
      for (int i = 0; i < n; ++i) pts[i].weight = a.values[i];

      const OneCenterResult c = weighted_one_center(pts);
      out.all_radii.push_back(c.radius);
      if (!have_best || better_solution(c.radius, a.values, out.best.radius,
                                        out.best.assignment.values)) {
        have_best = true;
        out.best.assignment = a;
        out.best.center = c.center;
        out.best.radius = c.radius;
        out.best.determinators = c.determinators;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // next combination
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

}  // namespace wassign
