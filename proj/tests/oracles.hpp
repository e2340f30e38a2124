#pragma once

// Test-only oracles and instance helpers, kept independent of the library's
// algorithm paths they are used to check.

#include <climits>
#include <cstdint>
#include <random>
#include <vector>

#include "pbs/core.hpp"
#include "pbs/reduction.hpp"
#include "pbs/shortcut_graph.hpp"

namespace oracle {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

// Discrete matching over a gridded segment parameter: minimal over monotone
// grid assignments of the max vertex distance, combined with the pinned
// endpoint distances. Over-approximates the true distance by at most the
// grid pitch times the segment length.
inline double dp_segment_chain_distance(pbs::Point a, pbs::Point b,
                                        const std::vector<pbs::Point>& chain,
                                        int steps = 10000) {
  const int m = static_cast<int>(chain.size());
  auto seg_at = [&](int s) {
    return a + (static_cast<double>(s) / steps) * (b - a);
  };
  std::vector<double> prev(steps + 1), cur(steps + 1);
  for (int s = 0; s <= steps; ++s) prev[s] = pbs::dist(seg_at(s), chain[0]);
  for (int k = 1; k < m; ++k) {
    double run = prev[0];
    for (int s = 0; s <= steps; ++s) {
      run = std::min(run, prev[s]);
      cur[s] = std::max(run, pbs::dist(seg_at(s), chain[k]));
    }
    std::swap(prev, cur);
  }
  double free_ends = prev[0];
  for (int s = 1; s <= steps; ++s) free_ends = std::min(free_ends, prev[s]);
  return std::max({free_ends, pbs::dist(a, chain.front()),
                   pbs::dist(b, chain.back())});
}

inline std::vector<pbs::Point> random_chain(std::mt19937_64& rng, int len,
                                            double step_scale) {
  std::vector<pbs::Point> pts;
  pbs::Point cur{10.0 * (uniform01(rng) - 0.5), 10.0 * (uniform01(rng) - 0.5)};
  pts.push_back(cur);
  for (int i = 1; i < len; ++i) {
    const double angle = 2.0 * 3.14159265358979323846 * uniform01(rng);
    const double step = step_scale * (0.3 + 1.7 * uniform01(rng));
    cur = cur + pbs::Point{step * std::cos(angle), step * std::sin(angle)};
    pts.push_back(cur);
  }
  return pts;
}

inline pbs::PolylineBundle single_polyline_bundle(
    const std::vector<pbs::Point>& pts) {
  pbs::PolylineBundle bundle;
  bundle.bends = pts;
  std::vector<int> poly(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) poly[i] = static_cast<int>(i);
  bundle.polylines.push_back(poly);
  return bundle;
}

// Exact minimum star-cover size over ALL stars (every combination of central
// bend and per-polyline incoming shortcut or none), by branch and bound on
// the element with the fewest covering stars. Universe must fit in 64 bits.
namespace detail {

inline void cover_dfs(std::uint64_t covered, std::uint64_t full,
                      const std::vector<std::uint64_t>& sets, int depth,
                      int& best) {
  if (covered == full) {
    best = std::min(best, depth);
    return;
  }
  if (depth + 1 >= best) return;
  const std::uint64_t uncovered = full & ~covered;
  int target = -1;
  int fewest = INT_MAX;
  for (int e = 0; e < 64; ++e) {
    if (!(uncovered >> e & 1)) continue;
    int count = 0;
    for (std::uint64_t s : sets) {
      if (s >> e & 1) ++count;
    }
    if (count == 0) return;  // uncoverable
    if (count < fewest) {
      fewest = count;
      target = e;
    }
  }
  for (std::uint64_t s : sets) {
    if (s >> target & 1) cover_dfs(covered | s, full, sets, depth + 1, best);
  }
}

}  // namespace detail

inline int exhaustive_star_cover_opt(const pbs::PolylineBundle& bundle,
                                     const std::vector<pbs::ShortcutGraph>& graphs) {
  // flat pair ids
  std::vector<int> offset(bundle.polyline_count());
  int total = 0;
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    offset[li] = total;
    total += static_cast<int>(bundle.polylines[li].size()) - 1;
  }
  if (total > 64) {
    throw std::logic_error("star-cover oracle: universe exceeds 64 pairs");
  }

  std::vector<std::vector<std::pair<int, int>>> occ(bundle.bend_count());
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    for (int pos = 0; pos < static_cast<int>(bundle.polylines[li].size());
         ++pos) {
      occ[bundle.polylines[li][pos]].push_back({li, pos});
    }
  }

  std::vector<std::uint64_t> sets;
  for (int b = 0; b < bundle.bend_count(); ++b) {
    // arm options per occurrence: none, or any incoming shortcut
    std::vector<std::vector<std::uint64_t>> options;
    for (const auto& [li, pos] : occ[b]) {
      std::vector<std::uint64_t> arm_masks{0};
      if (pos >= 1) {
        for (int outer = 0; outer < pos; ++outer) {
          if (!graphs[li].has_edge(outer, pos)) continue;
          std::uint64_t mask = 0;
          for (int seg = outer; seg < pos; ++seg) {
            mask |= std::uint64_t{1} << (offset[li] + seg);
          }
          arm_masks.push_back(mask);
        }
      }
      options.push_back(std::move(arm_masks));
    }
    std::vector<std::uint64_t> combos{0};
    for (const auto& arm_masks : options) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t base : combos) {
        for (std::uint64_t arm : arm_masks) next.push_back(base | arm);
      }
      combos = std::move(next);
    }
    for (std::uint64_t mask : combos) {
      if (mask) sets.push_back(mask);
    }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // drop sets dominated by a superset (safe for minimum cover)
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t s : sets) {
    bool dominated = false;
    for (std::uint64_t t : sets) {
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(s);
  }

  const std::uint64_t full =
      total == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  int best = INT_MAX;
  detail::cover_dfs(0, full, maximal, 0, best);
  return best;
}

// Exhaustive minimum independent dominating set size.
inline int exhaustive_mids_size(const pbs::Graph& graph) {
  int best = INT_MAX;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << graph.n); ++mask) {
    std::vector<int> set;
    for (int v = 0; v < graph.n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    if (static_cast<int>(set.size()) < best &&
        pbs::is_independent_dominating(graph, set)) {
      best = static_cast<int>(set.size());
    }
  }
  return best;
}

// Random simple graph with nhat vertices and 1 <= m <= min(2 nhat, C(nhat,2))
// edges (the sparse corpus family).
inline pbs::Graph random_sparse_graph(std::mt19937_64& rng, int nhat) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < nhat; ++u) {
    for (int v = u + 1; v < nhat; ++v) all_pairs.push_back({u, v});
  }
  for (size_t i = all_pairs.size(); i > 1; --i) {  // Fisher-Yates
    std::swap(all_pairs[i - 1], all_pairs[below(rng, i)]);
  }
  const int max_m =
      std::min<int>(2 * nhat, static_cast<int>(all_pairs.size()));
  const int m = 1 + static_cast<int>(below(rng, max_m));
  pbs::Graph graph;
  graph.n = nhat;
  graph.edges.assign(all_pairs.begin(), all_pairs.begin() + m);
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

}  // namespace oracle
