#pragma once

#include <utility>
#include <vector>

#include "pbs/shortcut_graph.hpp"

namespace pbs {

// One incoming shortcut of a star: positions are polyline-local and oriented
// (outer < central under the polyline's stored direction).
struct StarArm {
  int polyline = -1;
  int outer = -1;
  int central = -1;
};

// A central bend with at most one incoming shortcut arm per polyline
// containing it.
struct Star {
  int central_bend = -1;
  std::vector<StarArm> arms;
};

struct StarCover {
  std::vector<Star> stars;
};

// t: max number of polylines any bend occurs in.
// w: max number of segments any valid shortcut skips.
struct CoverStats {
  int t = 0;
  int w = 0;
};

// Re-orients polylines: reverse[i] flips polyline i's stored direction.
PolylineBundle orient_bundle(const PolylineBundle& bundle,
                             const std::vector<char>& reverse);
PolylineBundle orient_bundle(const PolylineBundle& bundle, bool reverse_all);

// Segment-polyline pairs covered by a star: for each arm, the segments of
// that polyline at positions outer .. central-1 (segment = its first bend's
// position).
std::vector<std::pair<int, int>> covered_pairs(const Star& star);

CoverStats cover_stats(const PolylineBundle& bundle,
                       const std::vector<ShortcutGraph>& graphs);

// One star per bend; each arm is the farthest-reaching incoming shortcut of
// that bend's position on the polyline. Bends sitting only at source
// positions yield arm-less stars.
std::vector<Star> enumerate_maximal_stars(const PolylineBundle& bundle,
                                          const std::vector<ShortcutGraph>& graphs);

// Greedy set cover over segment-polyline pairs: repeatedly selects the
// maximal star covering the most uncovered pairs (ties: lowest central bend).
StarCover greedy_star_cover(const PolylineBundle& bundle,
                            const std::vector<ShortcutGraph>& graphs);

// Decomposes a factor-1-valid retained set into a star cover of at most
// |retained| stars: each retained bend becomes a central whose arms are its
// incoming induced segments. Throws InvariantViolation if some induced
// segment is not a valid shortcut.
StarCover decompose_into_stars(const PolylineBundle& bundle,
                               const std::vector<ShortcutGraph>& graphs,
                               const std::vector<int>& retained);

bool covers_all_pairs(const PolylineBundle& bundle, const StarCover& cover);

// The bi-criteria approximation: central bends of the greedy cover plus all
// polyline endpoints. Valid at factor 2; size <= (ln(t*w) + 2) * OPT.
std::vector<int> bicriteria_simplify(const PolylineBundle& bundle,
                                     const ToleranceSpec& tol,
                                     bool reverse_all = false);

}  // namespace pbs
