#include "pbs/exact.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "pbs/errors.hpp"

namespace pbs {

namespace {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// (size, lexicographic) total order on candidate retained sets.
bool better(const std::vector<int>& a, const std::vector<int>& b) {
  if (b.empty()) return true;
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace

std::vector<int> brute_force(const PolylineBundle& bundle,
                             const ToleranceSpec& tol, int max_n) {
  const int n = bundle.bend_count();
  if (n > max_n) {
    throw InstanceTooLarge("brute_force: " + std::to_string(n) + " bends > cap " +
                           std::to_string(max_n));
  }
  const auto endpoints = endpoint_bends(bundle);
  std::vector<char> is_endpoint(n, 0);
  for (int e : endpoints) is_endpoint[e] = 1;
  std::vector<int> free_bends;
  for (int b = 0; b < n; ++b) {
    if (!is_endpoint[b]) free_bends.push_back(b);
  }
  const int f = static_cast<int>(free_bends.size());

  std::vector<int> best;
  std::vector<int> candidate;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    candidate.clear();
    int fi = 0;
    for (int b = 0; b < n; ++b) {  // merge, keeping candidate sorted
      if (is_endpoint[b]) {
        candidate.push_back(b);
      } else {
        if (mask >> fi & 1) candidate.push_back(b);
        ++fi;
      }
    }
    if (!best.empty() && candidate.size() > best.size()) continue;
    if (is_valid_simplification(bundle, tol, candidate) &&
        better(candidate, best)) {
      best = candidate;
    }
  }
  return best;
}

ShortcutGraph prune_graph(const ShortcutGraph& graph, std::span<const int> keep,
                          std::span<const int> drop) {
  const int m = graph.size;
  std::vector<char> dropped(m, 0);
  for (int p : drop) dropped[p] = 1;
  for (int p : keep) {
    if (dropped[p]) {
      throw InvariantViolation("prune_graph: keep and drop sets intersect");
    }
  }
  // kept_before[i] = number of kept positions < i; edge (i,j) survives iff no
  // kept position lies strictly between i and j.
  std::vector<int> kept_before(m + 1, 0);
  {
    std::vector<char> kept(m, 0);
    for (int p : keep) kept[p] = 1;
    for (int i = 0; i < m; ++i) kept_before[i + 1] = kept_before[i] + kept[i];
  }
  ShortcutGraph pruned;
  pruned.polyline = graph.polyline;
  pruned.size = m;
  pruned.adj.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    if (dropped[i]) continue;
    for (int j = i + 1; j < m; ++j) {
      if (dropped[j] || !graph.has_edge(i, j)) continue;
      if (kept_before[j] - kept_before[i + 1] > 0) continue;
      pruned.adj[static_cast<size_t>(i) * m + j] = 1;
    }
  }
  return pruned;
}

std::vector<int> fpt_solve(const PolylineBundle& bundle,
                           const ToleranceSpec& tol, int max_k,
                           SolveStats* stats, int threads) {
  const auto shared = shared_bends(bundle);
  const int k = static_cast<int>(shared.size());
  if (k > max_k) {
    throw InstanceTooLarge("fpt_solve: k = " + std::to_string(k) + " > cap " +
                           std::to_string(max_k));
  }
  const auto graphs = build_shortcut_graphs(bundle, tol, threads);

  // shared bend occurrences as (polyline, position, shared-id)
  std::vector<int> shared_id(bundle.bend_count(), -1);
  for (int s = 0; s < k; ++s) shared_id[shared[s]] = s;
  std::vector<std::vector<std::pair<int, int>>> shared_pos(
      bundle.polyline_count());  // per polyline: (position, shared-id)
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    for (int pos = 0; pos < static_cast<int>(poly.size()); ++pos) {
      if (shared_id[poly[pos]] >= 0) {
        shared_pos[li].push_back({pos, shared_id[poly[pos]]});
      }
    }
  }

  const std::uint64_t subsets = std::uint64_t{1} << k;
  // evaluate one subset of the shared bends; empty result = infeasible
  auto evaluate = [&](std::uint64_t member_mask) -> std::vector<int> {
    std::vector<char> retained(bundle.bend_count(), 0);
    std::vector<int> keep, drop;
    for (int li = 0; li < bundle.polyline_count(); ++li) {
      keep.clear();
      drop.clear();
      for (const auto& [pos, sid] : shared_pos[li]) {
        if (member_mask >> sid & 1) {
          keep.push_back(pos);
        } else {
          drop.push_back(pos);
        }
      }
      const ShortcutGraph pruned = prune_graph(graphs[li], keep, drop);
      const auto path = shortest_path_positions(pruned);
      if (path.empty()) return {};
      for (int pos : path) retained[bundle.polylines[li][pos]] = 1;
    }
    std::vector<int> result;
    for (int b = 0; b < bundle.bend_count(); ++b) {
      if (retained[b]) result.push_back(b);
    }
    return result;
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(resolve_threads(threads), subsets));
  std::vector<std::vector<int>> best_per_worker(workers);
  auto run_range = [&](int w, std::uint64_t begin, std::uint64_t end) {
    std::vector<int> best;
    for (std::uint64_t i = begin; i < end; ++i) {
      // Gray-code order: successive subsets differ in one shared bend.
      const std::uint64_t mask = i ^ (i >> 1);
      auto candidate = evaluate(mask);
      if (!candidate.empty() && better(candidate, best)) {
        best = std::move(candidate);
      }
    }
    best_per_worker[w] = std::move(best);
  };
  if (workers <= 1) {
    run_range(0, 0, subsets);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (subsets + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(subsets, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, w, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<int> best;
  for (auto& candidate : best_per_worker) {
    if (!candidate.empty() && better(candidate, best)) best = std::move(candidate);
  }
  if (best.empty()) {
    throw InvariantViolation("fpt_solve: no feasible subset (unexpected)");
  }
  if (stats) {
    stats->k = k;
    stats->subsets_searched = subsets;
    stats->optimum_size = static_cast<int>(best.size());
  }
  return best;
}

}  // namespace pbs
