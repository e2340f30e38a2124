#pragma once

#include <cstdint>

#include "pbs/core.hpp"

namespace pbs {

struct GenParams {
  std::uint64_t seed = 1;
  int n = 20;                   // total bends; requires n >= 2 * l
  int l = 2;                    // polylines
  double share_fraction = 0.3;  // per polyline after the first
  double delta = 1.0;           // sets the random-walk step scale
};

// l random-walk polylines over exactly n bends. Every polyline after the
// first splices in a contiguous index block of an earlier polyline
// (roughly share_fraction of its length), producing genuinely shared bends.
// Deterministic for a fixed parameter set.
PolylineBundle gen_random_bundle(const GenParams& params);

}  // namespace pbs
