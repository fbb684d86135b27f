#pragma once

#include <random>

#include "wassign/wcenter.hpp"

namespace testutil {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform01() { return (gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline wassign::Instance random_instance(Rng& rng, int n, int k,
                                         double wlo = 0.2, double whi = 2.0) {
  wassign::Instance inst;
  for (int i = 0; i < n; ++i)
    inst.points.push_back({rng.uniform01(), rng.uniform01()});
  for (int i = 0; i < k; ++i)
    inst.weights.push_back(rng.uniform(wlo, whi));
  return inst;
}

}  // namespace testutil
