#pragma once

#include <string>
#include <vector>

#include "pbs/core.hpp"

namespace pbs {

struct RenderOptions {
  double scale = 20.0;         // pixels per coordinate unit
  double stroke_width = 1.5;   // px, input polylines
  bool show_retained = true;   // draw bend markers
};

// One path per polyline; with a solution, retained bends are filled circles,
// dropped bends hollow, and the simplified polylines are overlaid. The
// viewport fits the bounding box with a 5% margin.
std::string render_svg(const PolylineBundle& bundle,
                       const std::vector<int>* retained,
                       const RenderOptions& options = {});

}  // namespace pbs
