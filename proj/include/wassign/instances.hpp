#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wassign/wcenter.hpp"

namespace wassign {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// Text format:
///   line 1:        n k
///   next n lines:  x y
///   next k lines:  one weight per line
/// Floats are printed with their shortest round-trip representation, so
/// parse(serialize(i)) == i bit-exactly.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

struct GeneratorSpec {
  enum class Kind { Random, LowerBound };
  Kind kind = Kind::Random;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  double weight_lo = 0.2;
  double weight_hi = 2.0;
};

/// n points uniform in [0,1]^2, k weights uniform in [weight_lo, weight_hi];
/// deterministic for a fixed seed across platforms.
Instance gen_random(const GeneratorSpec& spec);

/// Adversarial construction with many distinct weighted centers: floor(n/4)
/// points evenly on an inner circle (radius 0.3), the rest in three tight
/// clusters on the unit circle, weights {1/2 - i*eps} with eps = 1/(8k).
Instance gen_lower_bound(int n, int k);

/// Number of distinct points that arise as the weighted center of some
/// assignment, via enumeration of all 2- and 3-tuples of (point, weight).
long count_distinct_centers(const Instance& inst);

}  // namespace wassign
