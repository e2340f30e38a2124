#include "pbs/shortcut_graph.hpp"

#include <cstdlib>
#include <deque>
#include <string>
#include <thread>

#include "pbs/errors.hpp"
#include "pbs/frechet.hpp"

namespace pbs {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("PBS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

ShortcutGraph build_shortcut_graph(std::span<const Point> chain,
                                   const ToleranceSpec& tol, int polyline_id) {
  const int m = static_cast<int>(chain.size());
  if (m < 2) {
    throw InvariantViolation("shortcut graph needs a chain of >= 2 points");
  }
  ShortcutGraph g;
  g.polyline = polyline_id;
  g.size = m;
  g.adj.assign(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i + 1 < m; ++i) {
    g.adj[static_cast<size_t>(i) * m + i + 1] = 1;  // adjacent segments, distance 0
    for (int j = i + 2; j < m; ++j) {
      if (segment_chain_within(chain[i], chain[j],
                               chain.subspan(i, j - i + 1), tol.delta,
                               tol.eps)) {
        g.adj[static_cast<size_t>(i) * m + j] = 1;
      }
    }
  }
  return g;
}

std::vector<ShortcutGraph> build_shortcut_graphs(const PolylineBundle& bundle,
                                                 const ToleranceSpec& tol,
                                                 int threads) {
  const int l = bundle.polyline_count();
  std::vector<ShortcutGraph> graphs(l);
  const int workers = std::min(resolve_threads(threads), l > 0 ? l : 1);
  auto build_range = [&](int begin, int end) {
    for (int li = begin; li < end; ++li) {
      const auto chain = bundle.chain(li);
      graphs[li] = build_shortcut_graph(chain, tol, li);
    }
  };
  if (workers <= 1 || l <= 1) {
    build_range(0, l);
    return graphs;
  }
  std::vector<std::thread> pool;
  const int chunk = (l + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(l, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(build_range, begin, end);
  }
  for (auto& th : pool) th.join();
  return graphs;
}

int max_reach(const ShortcutGraph& graph, int j) {
  if (j < 1 || j >= graph.size) {
    throw InvariantViolation("max_reach: position out of range");
  }
  for (int i = 0; i < j; ++i) {
    if (graph.has_edge(i, j)) return i;
  }
  return j - 1;  // unreachable for unpruned graphs
}

std::vector<int> shortest_path_positions(const ShortcutGraph& graph) {
  const int m = graph.size;
  const int unreached = -1;
  std::vector<int> to_end(m, unreached);  // hops to reach position m-1
  to_end[m - 1] = 0;
  std::deque<int> queue{m - 1};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < v; ++u) {
      if (graph.has_edge(u, v) && to_end[u] == unreached) {
        to_end[u] = to_end[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (to_end[0] == unreached) return {};
  std::vector<int> path{0};
  int cur = 0;
  while (cur != m - 1) {
    int next = -1;
    for (int j = cur + 1; j < m; ++j) {
      if (graph.has_edge(cur, j) && to_end[j] == to_end[cur] - 1) next = j;
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

std::vector<int> optimal_single_polyline(const PolylineBundle& bundle,
                                         int polyline,
                                         const ToleranceSpec& tol) {
  const auto chain = bundle.chain(polyline);
  const auto graph = build_shortcut_graph(chain, tol, polyline);
  const auto path = shortest_path_positions(graph);
  std::vector<int> retained;
  retained.reserve(path.size());
  for (int pos : path) retained.push_back(bundle.polylines[polyline][pos]);
  std::sort(retained.begin(), retained.end());
  return retained;
}

}  // namespace pbs
