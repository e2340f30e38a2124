#include "pbs/star_cover.hpp"

#include <algorithm>
#include <string>

#include "pbs/errors.hpp"

namespace pbs {

namespace {

// Flat indexing of segment-polyline pairs.
struct PairSpace {
  std::vector<int> offset;  // offset[li] .. offset[li] + len_i - 2
  int total = 0;

  explicit PairSpace(const PolylineBundle& bundle) {
    offset.resize(bundle.polyline_count());
    for (int li = 0; li < bundle.polyline_count(); ++li) {
      offset[li] = total;
      total += static_cast<int>(bundle.polylines[li].size()) - 1;
    }
  }
  int id(int polyline, int segment) const { return offset[polyline] + segment; }
};

std::vector<std::vector<std::pair<int, int>>> bend_occurrences(
    const PolylineBundle& bundle) {
  std::vector<std::vector<std::pair<int, int>>> occ(bundle.bend_count());
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    for (int pos = 0; pos < static_cast<int>(poly.size()); ++pos) {
      occ[poly[pos]].push_back({li, pos});
    }
  }
  return occ;
}

}  // namespace

PolylineBundle orient_bundle(const PolylineBundle& bundle,
                             const std::vector<char>& reverse) {
  if (reverse.size() != bundle.polylines.size()) {
    throw InvariantViolation("orient_bundle: one flag per polyline required");
  }
  PolylineBundle oriented = bundle;
  for (size_t li = 0; li < oriented.polylines.size(); ++li) {
    if (reverse[li]) {
      std::reverse(oriented.polylines[li].begin(), oriented.polylines[li].end());
    }
  }
  return oriented;
}

PolylineBundle orient_bundle(const PolylineBundle& bundle, bool reverse_all) {
  return orient_bundle(
      bundle, std::vector<char>(bundle.polylines.size(), reverse_all ? 1 : 0));
}

std::vector<std::pair<int, int>> covered_pairs(const Star& star) {
  std::vector<std::pair<int, int>> pairs;
  for (const StarArm& arm : star.arms) {
    for (int seg = arm.outer; seg < arm.central; ++seg) {
      pairs.push_back({arm.polyline, seg});
    }
  }
  return pairs;
}

CoverStats cover_stats(const PolylineBundle& bundle,
                       const std::vector<ShortcutGraph>& graphs) {
  CoverStats stats;
  std::vector<int> count(bundle.bend_count(), 0);
  for (const auto& poly : bundle.polylines) {
    for (int idx : poly) ++count[idx];
  }
  for (int c : count) stats.t = std::max(stats.t, c);
  for (const auto& g : graphs) {
    for (int i = 0; i < g.size; ++i) {
      for (int j = i + 1; j < g.size; ++j) {
        if (g.has_edge(i, j)) stats.w = std::max(stats.w, j - i);
      }
    }
  }
  return stats;
}

std::vector<Star> enumerate_maximal_stars(const PolylineBundle& bundle,
                                          const std::vector<ShortcutGraph>& graphs) {
  const auto occ = bend_occurrences(bundle);
  std::vector<Star> stars;
  stars.reserve(bundle.bend_count());
  for (int b = 0; b < bundle.bend_count(); ++b) {
    Star star;
    star.central_bend = b;
    for (const auto& [li, pos] : occ[b]) {
      if (pos == 0) continue;  // source position: no incoming shortcut
      star.arms.push_back({li, max_reach(graphs[li], pos), pos});
    }
    stars.push_back(std::move(star));
  }
  return stars;
}

StarCover greedy_star_cover(const PolylineBundle& bundle,
                            const std::vector<ShortcutGraph>& graphs) {
  const PairSpace space(bundle);
  const auto stars = enumerate_maximal_stars(bundle, graphs);
  std::vector<char> covered(space.total, 0);
  int uncovered_total = space.total;

  auto uncovered_count = [&](const Star& star) {
    int count = 0;
    for (const StarArm& arm : star.arms) {
      for (int seg = arm.outer; seg < arm.central; ++seg) {
        if (!covered[space.id(arm.polyline, seg)]) ++count;
      }
    }
    return count;
  };

  StarCover cover;
  while (uncovered_total > 0) {
    int best = -1;
    int best_count = 0;
    for (int s = 0; s < static_cast<int>(stars.size()); ++s) {
      const int count = uncovered_count(stars[s]);
      if (count > best_count) {
        best = s;
        best_count = count;
      }
    }
    if (best < 0) {
      throw InvariantViolation("star cover: uncoverable pair remains");
    }
    for (const StarArm& arm : stars[best].arms) {
      for (int seg = arm.outer; seg < arm.central; ++seg) {
        const int id = space.id(arm.polyline, seg);
        if (!covered[id]) {
          covered[id] = 1;
          --uncovered_total;
        }
      }
    }
    cover.stars.push_back(stars[best]);
  }
  return cover;
}

StarCover decompose_into_stars(const PolylineBundle& bundle,
                               const std::vector<ShortcutGraph>& graphs,
                               const std::vector<int>& retained) {
  const auto induced = induced_simplification(bundle, retained);
  // arms grouped by central bend, in ascending bend order
  std::vector<std::vector<StarArm>> arms_of(bundle.bend_count());
  std::vector<int> position_of;
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    position_of.assign(bundle.bend_count(), -1);
    for (int pos = 0; pos < static_cast<int>(poly.size()); ++pos) {
      position_of[poly[pos]] = pos;
    }
    const auto& simple = induced[li];
    for (size_t s = 0; s + 1 < simple.size(); ++s) {
      const int outer = position_of[simple[s]];
      const int central = position_of[simple[s + 1]];
      if (!graphs[li].has_edge(outer, central)) {
        throw InvariantViolation(
            "decompose_into_stars: induced segment on polyline " +
            std::to_string(li) + " is not a valid shortcut");
      }
      arms_of[simple[s + 1]].push_back({li, outer, central});
    }
  }
  StarCover cover;
  for (int b = 0; b < bundle.bend_count(); ++b) {
    if (arms_of[b].empty()) continue;
    cover.stars.push_back({b, std::move(arms_of[b])});
  }
  return cover;
}

bool covers_all_pairs(const PolylineBundle& bundle, const StarCover& cover) {
  const PairSpace space(bundle);
  std::vector<char> covered(space.total, 0);
  for (const Star& star : cover.stars) {
    for (const auto& [li, seg] : covered_pairs(star)) {
      covered[space.id(li, seg)] = 1;
    }
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

std::vector<int> bicriteria_simplify(const PolylineBundle& bundle,
                                     const ToleranceSpec& tol,
                                     bool reverse_all) {
  const PolylineBundle oriented = orient_bundle(bundle, reverse_all);
  const auto graphs = build_shortcut_graphs(oriented, tol);
  const auto cover = greedy_star_cover(oriented, graphs);

  std::vector<char> keep(bundle.bend_count(), 0);
  for (const Star& star : cover.stars) keep[star.central_bend] = 1;
  for (const auto& poly : bundle.polylines) {
    keep[poly.front()] = 1;
    keep[poly.back()] = 1;
  }
  std::vector<int> retained;
  for (int b = 0; b < bundle.bend_count(); ++b) {
    if (keep[b]) retained.push_back(b);
  }
  return retained;
}

}  // namespace pbs
