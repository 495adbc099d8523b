#pragma once

#include <string>

#include "overhang/model.hpp"

namespace overhang {

struct RenderSpec {
  double scale = 40.0;            // pixels per block length
  bool show_forces = false;       // contact-force arrows from a witness
  bool show_point_weights = true; // one arrow per point weight
  bool shading = true;            // support set light, balancing set dark
};

// Deterministic SVG 1.1 picture: table, blocks as rectangles, optional
// shading and force/weight arrows with length proportional to magnitude.
// An unbalanced stack renders with a warning banner instead of failing.
std::string render_svg(const Stack& stack, const RenderSpec& spec = {});

}  // namespace overhang
