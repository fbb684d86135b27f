#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "wassign/smallk.hpp"

using namespace wassign;

TEST_CASE("order_k_subsets cells are witnessed correctly") {
  testutil::Rng rng(71);
  for (int it = 0; it < 30; ++it) {
    const int n = rng.uniform_int(3, 9);
    const int k = rng.uniform_int(1, std::min(n, 3));
    Instance inst = testutil::random_instance(rng, n, k, 0.1, 1.0);
    const auto cells = order_k_subsets(inst);
    REQUIRE(!cells.empty());
    for (const auto& cell : cells) {
      REQUIRE(static_cast<int>(cell.sites.size()) == k);
      // the witness's k nearest points are exactly the sites
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return dist2(inst.points[a], cell.witness) <
               dist2(inst.points[b], cell.witness);
      });
      std::vector<int> nearest(idx.begin(), idx.begin() + k);
      std::sort(nearest.begin(), nearest.end());
      const double gap = dist(inst.points[idx[k]], cell.witness) -
                         dist(inst.points[idx[k - 1]], cell.witness);
      if (gap < 1e-9) continue;  // witness on a cell boundary, either side ok
      CHECK(nearest == cell.sites);
    }
  }
}

TEST_CASE("order-1 cells cover every non-dominated site") {
  Instance inst;
  inst.points = {{0, 0}, {2, 0}, {1, 2}};
  inst.weights = {0.5};
  const auto cells = order_k_subsets(inst);
  CHECK(cells.size() == 3);  // every point owns a nearest-neighbor cell
}

TEST_CASE("farthest_point matches naive scan") {
  testutil::Rng rng(72);
  for (int it = 0; it < 80; ++it) {
    const int n = rng.uniform_int(1, 12);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    const Point q{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    int naive = 0;
    for (int i = 1; i < n; ++i)
      if (dist2(pts[i], q) > dist2(pts[naive], q)) naive = i;
    const int got = farthest_point(pts, q);
    CHECK(dist2(pts[got], q) == dist2(pts[naive], q));
  }
}

TEST_CASE("farthest_point breaks exact ties by lowest index") {
  std::vector<Point> pts = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
  CHECK(farthest_point(pts, {0, 0}) == 0);
}

TEST_CASE("solve_small_k rejects weights above 1") {
  Instance inst;
  inst.points = {{0, 0}, {1, 0}};
  inst.weights = {1.5};
  CHECK_THROWS_AS(solve_small_k(inst), std::invalid_argument);
}

TEST_CASE("solve_small_k fixture") {
  Instance two;
  two.points = {{0, 0}, {4, 0}};
  two.weights = {0.5};
  CHECK(std::abs(solve_small_k(two).radius - 8.0 / 3.0) < 1e-12);
}

TEST_CASE("solve_small_k matches solve_exact") {
  testutil::Rng rng(73);
  for (int it = 0; it < 60; ++it) {
    const int n = rng.uniform_int(2, 9);
    const int k = rng.uniform_int(1, std::min(n, 3));
    Instance inst = testutil::random_instance(rng, n, k, 0.05, 1.0);
    const auto a = solve_exact(inst);
    const auto b = solve_small_k(inst);
    CHECK(std::abs(a.radius - b.radius) < 1e-9 * (1 + a.radius));
    CHECK(std::abs(covering_radius(b.center, inst, b.assignment) - b.radius) <
          1e-9 * (1 + b.radius));
  }
}

TEST_CASE("solve_small_k with k == n") {
  Instance inst;
  inst.points = {{0, 0}, {3, 0}, {1, 2}};
  inst.weights = {0.4, 0.6, 0.9};
  const auto a = solve_exact(inst);
  const auto b = solve_small_k(inst);
  CHECK(std::abs(a.radius - b.radius) < 1e-12 * (1 + a.radius));
}

TEST_CASE("decide_on_boundary basic behaviour") {
  Instance inst;
  inst.points = {{0, 0}, {4, 0}};
  inst.weights = {0.5};
  // at the optimum, the center sits on the circle of radius r* around the
  // unit-weight point
  const double rstar = 8.0 / 3.0;
  bool any = false;
  for (int p = 0; p < 2; ++p)
    if (decide_on_boundary(p, rstar * (1 + 1e-12), inst)) any = true;
  CHECK(any);
  for (int p = 0; p < 2; ++p)
    CHECK(!decide_on_boundary(p, rstar * 0.9, inst).has_value());
}
