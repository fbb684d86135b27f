#pragma once

#include <optional>
#include <string>

#include "wassign/wcenter.hpp"

namespace wassign {

struct RenderOptions {
  int size = 640;                      // square canvas, pixels
  std::optional<double> circle_radius; // draw C_{p,w}(R) for every point
  bool draw_solution = false;
};

/// Deterministic standalone SVG: points (weighted ones filled), optional
/// scaled circles at a fixed radius, and the solution's center, covering
/// circles and determinators when provided.
std::string render_svg(const Instance& inst, const RenderOptions& opts,
                       const SolveResult* solution = nullptr);

}  // namespace wassign
