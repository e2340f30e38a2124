#pragma once

#include <span>
#include <vector>

#include "pbs/core.hpp"

namespace pbs {

// Per-polyline DAG of valid shortcuts at threshold delta, over positions
// 0..size-1 of the polyline. Every consecutive pair (i, i+1) is an edge;
// (i, j) is an edge iff the segment (L[i], L[j]) is within delta of the
// spanned sub-chain. Immutable after construction.
struct ShortcutGraph {
  int polyline = -1;
  int size = 0;
  std::vector<char> adj;  // row-major, adj[i*size + j] for i < j

  bool has_edge(int i, int j) const {
    return 0 <= i && i < j && j < size &&
           adj[static_cast<size_t>(i) * size + j] != 0;
  }
};

// Naive O(m^3) construction over all position pairs of one chain.
ShortcutGraph build_shortcut_graph(std::span<const Point> chain,
                                   const ToleranceSpec& tol,
                                   int polyline_id = -1);

// Graphs for every polyline of the bundle. threads = 0 reads PBS_THREADS
// (default: hardware concurrency); construction is per-polyline independent.
std::vector<ShortcutGraph> build_shortcut_graphs(const PolylineBundle& bundle,
                                                 const ToleranceSpec& tol,
                                                 int threads = 0);

// Farthest-reaching incoming shortcut of position j: the smallest i with
// (i, j) an edge. Requires j >= 1; at worst returns j-1.
int max_reach(const ShortcutGraph& graph, int j);

// Positions of the deterministic shortest 0 -> size-1 path (fewest bends;
// ties resolved by repeatedly taking the farthest-reaching successor).
// Empty result means disconnected (possible only for pruned graphs).
std::vector<int> shortest_path_positions(const ShortcutGraph& graph);

// Optimal simplification of a single polyline as global bend indices.
std::vector<int> optimal_single_polyline(const PolylineBundle& bundle,
                                         int polyline,
                                         const ToleranceSpec& tol);

// Worker count resolution: explicit value, else PBS_THREADS, else hardware.
int resolve_threads(int threads);

}  // namespace pbs
