#include "pbs/reduction.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <set>
#include <string>

#include "pbs/errors.hpp"
#include "pbs/frechet.hpp"
#include "pbs/shortcut_graph.hpp"

namespace pbs {

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

void check_graph(const Graph& graph) {
  if (graph.n < 0) throw InvariantViolation("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.n || v >= graph.n) {
      throw InvariantViolation("graph: edge endpoint out of range");
    }
    if (u == v) throw InvariantViolation("graph: self loop");
    if (u > v) throw InvariantViolation("graph: edges must be normalized u < v");
    if (!seen.insert({u, v}).second) {
      throw InvariantViolation("graph: parallel edge");
    }
  }
}

std::vector<int> greedy_maximal_independent_set(const Graph& graph) {
  const auto adj = graph.adjacency();
  std::vector<char> blocked(graph.n, 0);
  std::vector<int> chosen;
  for (int v = 0; v < graph.n; ++v) {
    if (blocked[v]) continue;
    chosen.push_back(v);
    for (int u : adj[v]) blocked[u] = 1;
  }
  return chosen;
}

bool is_independent_dominating(const Graph& graph,
                               const std::vector<int>& vertex_set) {
  std::vector<char> in(graph.n, 0);
  for (int v : vertex_set) {
    if (v < 0 || v >= graph.n) return false;
    in[v] = 1;
  }
  std::vector<char> dominated = in;
  for (const auto& [u, v] : graph.edges) {
    if (in[u] && in[v]) return false;  // not independent
    if (in[u]) dominated[v] = 1;
    if (in[v]) dominated[u] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(),
                     [](char c) { return c != 0; });
}

namespace {

struct Builder {
  const Graph& graph;
  double delta, gamma, x_spacing;
  int nhat;
  int gaps;  // 2 n^2 + 2, segments per zigzag span

  std::vector<Point> coords;

  int add_bend(Point p) {
    coords.push_back(p);
    return static_cast<int>(coords.size()) - 1;
  }
};

// +delta for odd levels, -delta for even: the two zigzag columns of a vertex
// gadget. Identical across gadgets, so same-level squares are x-aligned.
double column_offset(int level, double delta) {
  return (level % 2 == 1) ? delta : -delta;
}

}  // namespace

std::pair<PolylineBundle, GadgetLayout> build_pbs_from_graph(
    const Graph& graph, const ReductionParams& params) {
  check_graph(graph);
  if (graph.n < 2) {
    throw GraphTooSmall("reduction needs at least 2 vertices, got " +
                        std::to_string(graph.n));
  }
  const int nhat = graph.n;
  const int mhat = graph.edge_count();
  const double delta = params.delta;
  if (!(delta > 0.0)) throw InfeasibleParameters("reduction: delta must be > 0");
  const double gamma_max = 2.0 * delta / (10.0 * nhat * nhat + 5.0);
  const double gamma = params.gamma > 0.0 ? params.gamma : 0.5 * gamma_max;
  const int gaps = 2 * nhat * nhat + 2;
  const double x_spacing_min = gaps * 3.0 * delta;
  const double x_spacing =
      params.x_spacing > 0.0 ? params.x_spacing : x_spacing_min;
  if (gamma > gamma_max * (1.0 + 1e-12)) {
    throw InfeasibleParameters("reduction: gamma exceeds 2 delta / (10 n^2 + 5)");
  }
  if (x_spacing < x_spacing_min * (1.0 - 1e-12)) {
    throw InfeasibleParameters("reduction: x_spacing below (2 n^2 + 2) * 3 delta");
  }

  Builder b{graph, delta, gamma, x_spacing, nhat, gaps, {}};
  GadgetLayout layout;
  layout.graph = graph;
  layout.delta = delta;
  layout.gamma = gamma;
  layout.x_spacing = x_spacing;
  layout.two_polylines = params.two_polylines;

  // --- vertex gadgets ---------------------------------------------------
  // Zigzag climbing in y by 3 delta per bend; inner bends alternate between
  // the two columns at center +/- delta, first/last sit on the centerline
  // (x-step delta for the first and last segment, 2 delta otherwise).
  const int levels = 2 * nhat;
  for (int v = 0; v < nhat; ++v) {
    const double cx = v * x_spacing;
    VertexGadget vg;
    vg.vertex = v;
    vg.bends.push_back(b.add_bend({cx, 0.0}));
    for (int lvl = 1; lvl <= levels; ++lvl) {
      vg.bends.push_back(
          b.add_bend({cx + column_offset(lvl, delta), 3.0 * delta * lvl}));
    }
    vg.bends.push_back(b.add_bend({cx, 3.0 * delta * (levels + 1)}));
    layout.vertex_gadgets.push_back(std::move(vg));
  }
  auto square = [&](int v, int level) {
    return layout.vertex_gadgets[v].bends[level];
  };

  // --- shared-square level allocation ------------------------------------
  // Neighborhood gadgets first: each one consumes a single level across all
  // of Adj(v), so a common free level always exists. Edge gadgets then take
  // a common free level where possible; otherwise they run tilted between
  // two different levels whose column parities keep the span from shrinking.
  const auto adj = graph.adjacency();
  std::vector<std::vector<char>> used(nhat,
                                      std::vector<char>(levels + 1, 0));
  std::vector<int> nbhd_level(nhat, -1);
  for (int v = 0; v < nhat; ++v) {
    std::vector<int> members = adj[v];
    members.push_back(v);
    std::sort(members.begin(), members.end());
    for (int lvl = 1; lvl <= levels; ++lvl) {
      const bool free = std::all_of(members.begin(), members.end(),
                                    [&](int u) { return !used[u][lvl]; });
      if (free) {
        nbhd_level[v] = lvl;
        for (int u : members) used[u][lvl] = 1;
        break;
      }
    }
    if (nbhd_level[v] < 0) {
      throw InvariantViolation("reduction: neighborhood level allocation failed");
    }
  }
  std::vector<std::pair<int, int>> edge_levels(mhat, {-1, -1});
  for (int e = 0; e < mhat; ++e) {
    const auto [u, v] = graph.edges[e];
    int lu = -1, lv = -1;
    for (int lvl = 1; lvl <= levels && lu < 0; ++lvl) {
      if (!used[u][lvl] && !used[v][lvl]) lu = lv = lvl;
    }
    if (lu < 0) {
      // tilted fallback: require column_offset(lv) >= column_offset(lu) so
      // the square-to-square x-distance is at least the same-level span
      for (int a = 1; a <= levels && lu < 0; ++a) {
        if (used[u][a]) continue;
        for (int bb = 1; bb <= levels; ++bb) {
          if (used[v][bb]) continue;
          if (column_offset(bb, delta) >= column_offset(a, delta)) {
            lu = a;
            lv = bb;
            break;
          }
        }
      }
      if (lu < 0) {
        throw InvariantViolation(
            "reduction: edge gadget level allocation failed for edge " +
            std::to_string(u) + "-" + std::to_string(v));
      }
    }
    used[u][lu] = 1;
    used[v][lv] = 1;
    edge_levels[e] = {lu, lv};
  }

  // --- edge gadgets -------------------------------------------------------
  // Zigzag between the two shared squares, in the frame whose x-axis runs
  // from square_u to square_v. Rows relative to the shared bends: first/last
  // 2/5 delta + gamma below, upper inner row 3/5 delta - gamma above, lower
  // inner row delta + gamma below; inner bends alternate lower, upper, ...
  const int inner_run = 2 * nhat * nhat + 1;
  for (int e = 0; e < mhat; ++e) {
    const auto [u, v] = graph.edges[e];
    const auto [lu, lv] = edge_levels[e];
    EdgeGadget eg;
    eg.u = u;
    eg.v = v;
    eg.tilted = lu != lv;
    const int a_id = square(u, lu);
    const int b_id = square(v, lv);
    const Point A = b.coords[a_id];
    const Point B = b.coords[b_id];
    const Point D = B - A;
    const double span = norm(D);
    eg.r = span / gaps;
    if (eg.r < 3.0 * delta * (1.0 - 1e-12)) {
      throw InvariantViolation("reduction: edge gadget inner step below 3 delta");
    }
    const Point ex = (1.0 / span) * D;
    const Point ey = perp(ex);
    const double end_drop = 0.4 * delta + gamma;
    const double upper = 0.6 * delta - gamma;
    const double lower = -delta - gamma;
    eg.bends.push_back(b.add_bend(A - end_drop * ey));
    eg.bends.push_back(a_id);
    for (int m = 1; m <= inner_run; ++m) {
      const double row = (m % 2 == 1) ? lower : upper;
      eg.bends.push_back(b.add_bend(A + (m * eg.r) * ex + row * ey));
    }
    eg.bends.push_back(b_id);
    eg.bends.push_back(b.add_bend(B - end_drop * ey));
    layout.edge_gadgets.push_back(std::move(eg));
  }

  // --- neighborhood gadgets -----------------------------------------------
  // All shared bends on one height; zigzag blocks between consecutive shared
  // bends with rows at +/- 4/5 delta, the bend adjacent to each shared bend
  // on the upper row; endpoints 4/5 delta below and 3t beyond b_1 / b_|Adj|.
  for (int v = 0; v < nhat; ++v) {
    std::vector<int> members = adj[v];
    members.push_back(v);
    std::sort(members.begin(), members.end());
    NeighborhoodGadget ng;
    ng.vertex = v;
    const int lvl = nbhd_level[v];
    std::vector<int> squares;
    for (int u : members) squares.push_back(square(u, lvl));
    const double y0 = b.coords[squares.front()].y;
    const double t =
        b.coords[squares.back()].x - b.coords[squares.front()].x;
    ng.span = t;
    ng.bends.push_back(
        b.add_bend({b.coords[squares.front()].x - 3.0 * t, y0 - 0.8 * delta}));
    for (size_t i = 0; i < squares.size(); ++i) {
      ng.shared_positions.push_back(static_cast<int>(ng.bends.size()));
      ng.bends.push_back(squares[i]);
      if (i + 1 < squares.size()) {
        const double x0 = b.coords[squares[i]].x;
        const double r =
            (b.coords[squares[i + 1]].x - x0) / gaps;
        ng.block_r.push_back(r);
        for (int j = 1; j <= inner_run; ++j) {
          const double row = (j % 2 == 1) ? 0.8 * delta : -0.8 * delta;
          ng.bends.push_back(b.add_bend({x0 + j * r, y0 + row}));
        }
      }
    }
    ng.bends.push_back(
        b.add_bend({b.coords[squares.back()].x + 3.0 * t, y0 - 0.8 * delta}));
    layout.neighborhood_gadgets.push_back(std::move(ng));
  }

  // --- assemble polylines ---------------------------------------------------
  PolylineBundle bundle;
  if (!params.two_polylines) {
    int next = 0;
    for (auto& vg : layout.vertex_gadgets) {
      vg.polyline = next++;
      bundle.polylines.push_back(vg.bends);
    }
    for (auto& eg : layout.edge_gadgets) {
      eg.polyline = next++;
      bundle.polylines.push_back(eg.bends);
    }
    for (auto& ng : layout.neighborhood_gadgets) {
      ng.polyline = next++;
      bundle.polylines.push_back(ng.bends);
    }
  } else {
    // connectors far outside the bounding box; one bend between consecutive
    // gadgets, two new segments each
    double max_x = -DBL_MAX, max_y = -DBL_MAX, min_x = DBL_MAX, min_y = DBL_MAX;
    for (const Point& p : b.coords) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    const Point far{max_x + 1e6 * diag, max_y + 1e6 * diag};

    std::vector<int> chain0;
    for (auto& vg : layout.vertex_gadgets) {
      if (!chain0.empty()) {
        const int c = b.add_bend(far);
        layout.connectors.push_back(c);
        chain0.push_back(c);
      }
      vg.polyline = 0;
      vg.offset = static_cast<int>(chain0.size());
      chain0.insert(chain0.end(), vg.bends.begin(), vg.bends.end());
    }
    std::vector<int> chain1;
    auto append_gadget = [&](int& polyline, int& offset,
                             const std::vector<int>& bends) {
      if (!chain1.empty()) {
        const int c = b.add_bend(far);
        layout.connectors.push_back(c);
        chain1.push_back(c);
      }
      polyline = 1;
      offset = static_cast<int>(chain1.size());
      chain1.insert(chain1.end(), bends.begin(), bends.end());
    };
    for (auto& eg : layout.edge_gadgets) {
      append_gadget(eg.polyline, eg.offset, eg.bends);
    }
    for (auto& ng : layout.neighborhood_gadgets) {
      append_gadget(ng.polyline, ng.offset, ng.bends);
    }
    bundle.polylines.push_back(std::move(chain0));
    bundle.polylines.push_back(std::move(chain1));
  }
  bundle.bends = std::move(b.coords);
  check_bundle(bundle);
  return {std::move(bundle), std::move(layout)};
}

namespace {

using PosPair = std::pair<int, int>;

std::vector<Point> gadget_chain(const PolylineBundle& bundle,
                                const std::vector<int>& bends) {
  std::vector<Point> pts;
  pts.reserve(bends.size());
  for (int id : bends) pts.push_back(bundle.bends[id]);
  return pts;
}

std::set<PosPair> nontrivial_shortcuts(const ShortcutGraph& g) {
  std::set<PosPair> result;
  for (int i = 0; i < g.size; ++i) {
    for (int j = i + 2; j < g.size; ++j) {
      if (g.has_edge(i, j)) result.insert({i, j});
    }
  }
  return result;
}

std::string pair_str(PosPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

// Re-evaluates every nontrivial decision with the threshold widened both
// ways; a decision that flips inside the widening is indeterminate.
void check_decision_stability(const std::vector<Point>& chain,
                              const ToleranceSpec& tol,
                              const std::string& where) {
  const double w = 1024.0 * DBL_EPSILON * tol.delta;
  const int m = static_cast<int>(chain.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      const std::span<const Point> sub(chain.data() + i, j - i + 1);
      const bool lo = segment_chain_within(chain[i], chain[j], sub, tol.delta,
                                           tol.eps - w);
      const bool hi = segment_chain_within(chain[i], chain[j], sub, tol.delta,
                                           tol.eps + w);
      if (lo != hi) {
        throw ClaimViolation(where + ": indeterminate shortcut decision " +
                             pair_str({i, j}));
      }
    }
  }
}

}  // namespace

ClaimReport verify_gadget_claims(const PolylineBundle& bundle,
                                 const GadgetLayout& layout, bool strict) {
  const ToleranceSpec tol = ToleranceSpec::with_default_eps(layout.delta);
  ClaimReport report;

  for (const auto& vg : layout.vertex_gadgets) {
    const auto chain = gadget_chain(bundle, vg.bends);
    const auto got = nontrivial_shortcuts(build_shortcut_graph(chain, tol));
    const int last = static_cast<int>(chain.size()) - 1;
    const std::set<PosPair> expected{{0, last}};
    if (got != expected) {
      throw ClaimViolation("vertex gadget " + std::to_string(vg.vertex) +
                           ": shortcut set differs from the single long "
                           "shortcut (" +
                           std::to_string(got.size()) + " found)");
    }
    if (strict) {
      check_decision_stability(chain, tol,
                               "vertex gadget " + std::to_string(vg.vertex));
    }
    ++report.vertex_gadgets;
  }

  for (int e = 0; e < static_cast<int>(layout.edge_gadgets.size()); ++e) {
    const auto& eg = layout.edge_gadgets[e];
    const auto chain = gadget_chain(bundle, eg.bends);
    const auto got = nontrivial_shortcuts(build_shortcut_graph(chain, tol));
    const int last = static_cast<int>(chain.size()) - 1;
    const std::set<PosPair> long_shortcuts{{0, last}, {0, last - 1}, {1, last}};
    const std::set<PosPair> allowed_extra{
        {0, 2}, {0, 3}, {last - 2, last}, {last - 3, last}};
    for (const PosPair& p : long_shortcuts) {
      if (!got.count(p)) {
        throw ClaimViolation("edge gadget " + std::to_string(e) +
                             ": missing long shortcut " + pair_str(p));
      }
    }
    int extras = 0;
    for (const PosPair& p : got) {
      if (long_shortcuts.count(p)) continue;
      if (!allowed_extra.count(p)) {
        throw ClaimViolation("edge gadget " + std::to_string(e) +
                             ": unexpected shortcut " + pair_str(p));
      }
      // every extra skips a shared bend (positions 1 and last-1)
      if (!(p.first < 1 && 1 < p.second) &&
          !(p.first < last - 1 && last - 1 < p.second)) {
        throw ClaimViolation("edge gadget " + std::to_string(e) +
                             ": shortcut avoids both shared bends " +
                             pair_str(p));
      }
      ++extras;
    }
    if (strict) {
      check_decision_stability(chain, tol, "edge gadget " + std::to_string(e));
    }
    report.edge_records.push_back({e, extras});
    ++report.edge_gadgets;
  }

  for (const auto& ng : layout.neighborhood_gadgets) {
    const auto chain = gadget_chain(bundle, ng.bends);
    const auto got = nontrivial_shortcuts(build_shortcut_graph(chain, tol));
    const int last = static_cast<int>(chain.size()) - 1;
    std::set<PosPair> expected;
    for (int p : ng.shared_positions) expected.insert({p - 1, p + 1});
    std::vector<int> starts{0};
    starts.insert(starts.end(), ng.shared_positions.begin(),
                  ng.shared_positions.end());
    std::vector<int> ends = ng.shared_positions;
    ends.push_back(last);
    for (int s : starts) {
      for (int t : ends) {
        if (t <= s + 1) continue;
        if (s == 0 && t == last) continue;  // the one excluded combination
        expected.insert({s, t});
      }
    }
    if (got != expected) {
      std::string detail;
      for (const PosPair& p : got) {
        if (!expected.count(p)) detail += " unexpected" + pair_str(p);
      }
      for (const PosPair& p : expected) {
        if (!got.count(p)) detail += " missing" + pair_str(p);
      }
      throw ClaimViolation("neighborhood gadget " +
                           std::to_string(ng.vertex) + ":" + detail);
    }
    if (strict) {
      check_decision_stability(
          chain, tol, "neighborhood gadget " + std::to_string(ng.vertex));
    }
    ++report.neighborhood_gadgets;
  }
  return report;
}

AppendixReport verify_appendix_distances(const PolylineBundle& bundle,
                                         const GadgetLayout& layout) {
  const double delta = layout.delta;
  const double gamma = layout.gamma;
  const double eps = 1e-9 * delta;
  const int gaps = 2 * layout.graph.n * layout.graph.n + 2;
  AppendixReport report;

  auto c_of = [](double rp) {
    return 6.0 / std::sqrt(25.0 + 68.0 / (rp * rp) +
                           256.0 / (25.0 * rp * rp * rp * rp));
  };

  for (int e = 0; e < static_cast<int>(layout.edge_gadgets.size()); ++e) {
    const auto& eg = layout.edge_gadgets[e];
    auto at = [&](int pos) { return bundle.bends[eg.bends[pos]]; };
    const int last = static_cast<int>(eg.bends.size()) - 1;
    const double r = eg.r;
    EdgeGadgetDistances row;
    row.index = e;
    row.r_prime = r / delta;

    // third-last bend vs the (first, second-last) long shortcut
    row.d1 = point_segment_distance(at(last - 2), at(0), at(last - 1));
    row.d1_bound = delta + gamma - (0.4 * delta + gamma) / gaps;
    // inner bend two steps into a shortcut skipping two inner bends
    row.d2 = point_segment_distance(at(4), at(2), at(5));
    row.d2_closed =
        16.0 * delta * r / std::sqrt(64.0 * delta * delta + 225.0 * r * r);
    // upper inner bend vs the (second, 5th-bend) candidate
    row.d3 = point_segment_distance(at(3), at(1), at(4));
    {
      const double alpha1 = std::atan2(1.6 * delta, r);
      const double alpha2 = std::atan2(delta + gamma, 3.0 * r);
      row.d3_closed = std::hypot(r, 1.6 * delta) * std::sin(alpha1 - alpha2);
    }
    row.c_rprime = c_of(row.r_prime);
    row.d3_lower = row.c_rprime * delta;

    const double c_angle =
        row.r_prime * std::sin(std::atan(8.0 / (5.0 * row.r_prime)) -
                               std::atan(2.0 / (5.0 * row.r_prime)));
    if (std::abs(c_angle - row.c_rprime) > 1e-12) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": c(r') angle and radical forms disagree");
    }
    if (row.d1 > delta + eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d1 exceeds delta");
    }
    if (row.d1 > row.d1_bound + eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d1 exceeds its bound");
    }
    if (std::abs(row.d2 - row.d2_closed) > eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d2 deviates from closed form");
    }
    if (row.d2 < (48.0 / std::sqrt(2089.0)) * delta - eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d2 below the r' = 3 bound");
    }
    if (std::abs(row.d3 - row.d3_closed) > eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d3 deviates from closed form");
    }
    if (!(row.d3 > delta) || row.d3 < row.d3_lower - eps) {
      throw FormulaMismatch("edge gadget " + std::to_string(e) +
                            ": d3 not above delta / c(r') bound");
    }
    report.edges.push_back(row);
  }

  for (int i = 0; i < static_cast<int>(layout.neighborhood_gadgets.size());
       ++i) {
    const auto& ng = layout.neighborhood_gadgets[i];
    if (ng.block_r.empty()) continue;  // degenerate |Adj| = 1 gadget
    auto at = [&](int pos) { return bundle.bends[ng.bends[pos]]; };
    const int p = ng.shared_positions.front();
    const double r = ng.block_r.front();
    NeighborhoodGadgetDistances row;
    row.index = i;
    row.r_prime = r / delta;
    // shortcut from b_1 skipping its adjacent upper-row bend
    row.d4 = point_segment_distance(at(p + 1), at(p), at(p + 2));
    row.d4_angle_form =
        3.0 * r * std::sin(std::atan(2.0 / (5.0 * row.r_prime)));
    row.d4_radical_form =
        6.0 * delta / std::sqrt(25.0 - 4.0 / (row.r_prime * row.r_prime));
    if (std::abs(row.d4 - row.d4_angle_form) > eps) {
      throw FormulaMismatch("neighborhood gadget " + std::to_string(i) +
                            ": d4 deviates from its angle form");
    }
    if (!(row.d4 > delta)) {
      throw FormulaMismatch("neighborhood gadget " + std::to_string(i) +
                            ": d4 not above delta");
    }
    report.neighborhoods.push_back(row);
  }
  return report;
}

std::vector<int> corresponding_simplification(
    const GadgetLayout& layout, const std::vector<int>& vertex_set) {
  if (!is_independent_dominating(layout.graph, vertex_set)) {
    throw NotIndependentDominating(
        "corresponding_simplification: input set is not independent and "
        "dominating");
  }
  std::vector<char> in(layout.graph.n, 0);
  for (int v : vertex_set) in[v] = 1;
  std::set<int> keep;
  for (const auto& vg : layout.vertex_gadgets) {
    if (in[vg.vertex]) {
      keep.insert(vg.bends.begin(), vg.bends.end());
    } else {
      keep.insert(vg.bends.front());
      keep.insert(vg.bends.back());
    }
  }
  for (const auto& eg : layout.edge_gadgets) {
    keep.insert(eg.bends.front());
    keep.insert(eg.bends.back());
  }
  for (const auto& ng : layout.neighborhood_gadgets) {
    keep.insert(ng.bends.front());
    keep.insert(ng.bends.back());
  }
  keep.insert(layout.connectors.begin(), layout.connectors.end());
  return {keep.begin(), keep.end()};
}

std::vector<int> extract_mids(const GadgetLayout& layout,
                              const std::vector<int>& retained) {
  std::vector<char> mask;
  {
    int max_id = -1;
    for (const auto& vg : layout.vertex_gadgets) {
      for (int id : vg.bends) max_id = std::max(max_id, id);
    }
    for (const auto& eg : layout.edge_gadgets) {
      for (int id : eg.bends) max_id = std::max(max_id, id);
    }
    for (const auto& ng : layout.neighborhood_gadgets) {
      for (int id : ng.bends) max_id = std::max(max_id, id);
    }
    mask.assign(max_id + 1, 0);
    for (int id : retained) {
      if (id >= 0 && id < static_cast<int>(mask.size())) mask[id] = 1;
    }
  }

  bool runs_skipped = true;
  for (const auto& eg : layout.edge_gadgets) {
    const int last = static_cast<int>(eg.bends.size()) - 1;
    for (int pos = 2; pos <= last - 2 && runs_skipped; ++pos) {
      if (mask[eg.bends[pos]]) runs_skipped = false;
    }
  }
  for (const auto& ng : layout.neighborhood_gadgets) {
    for (size_t s = 0; s + 1 < ng.shared_positions.size() && runs_skipped;
         ++s) {
      for (int pos = ng.shared_positions[s] + 1;
           pos < ng.shared_positions[s + 1] && runs_skipped; ++pos) {
        if (mask[ng.bends[pos]]) runs_skipped = false;
      }
    }
  }
  if (runs_skipped) {
    std::vector<int> read_off;
    for (const auto& vg : layout.vertex_gadgets) {
      for (size_t pos = 1; pos + 1 < vg.bends.size(); ++pos) {
        if (mask[vg.bends[pos]]) {
          read_off.push_back(vg.vertex);
          break;
        }
      }
    }
    if (is_independent_dominating(layout.graph, read_off)) return read_off;
  }
  return greedy_maximal_independent_set(layout.graph);
}

}  // namespace pbs
