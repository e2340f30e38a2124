#pragma once

#include <cstdint>
#include <span>

#include "pbs/shortcut_graph.hpp"

namespace pbs {

struct SolveStats {
  int k = 0;
  std::uint64_t subsets_searched = 0;
  int optimum_size = 0;
};

// Exhaustive baseline: minimum-cardinality retained set that is valid at
// factor 1; among minima, the lexicographically smallest index set.
// Throws InstanceTooLarge when the bundle has more than max_n bends.
std::vector<int> brute_force(const PolylineBundle& bundle,
                             const ToleranceSpec& tol, int max_n = 20);

// Copy of the graph with the positions in `drop` removed (with their incident
// edges) and every edge spanning a position in `keep` removed. O(n^2).
ShortcutGraph prune_graph(const ShortcutGraph& graph, std::span<const int> keep,
                          std::span<const int> drop);

// Subset enumeration over the shared bends: for each B' the shortcut graphs
// are pruned so shared bends are uniformly kept (no edge skips them) or
// dropped (their vertices vanish), then per-polyline shortest paths are
// unioned. Exact; 2^k iterations. Throws InstanceTooLarge when k > max_k.
// threads = 0 reads PBS_THREADS; the result is thread-count independent.
std::vector<int> fpt_solve(const PolylineBundle& bundle,
                           const ToleranceSpec& tol, int max_k = 24,
                           SolveStats* stats = nullptr, int threads = 0);

}  // namespace pbs
