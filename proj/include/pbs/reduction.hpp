#pragma once

#include <utility>
#include <vector>

#include "pbs/core.hpp"

namespace pbs {

// Simple undirected graph; edges normalized to u < v, sorted, unique.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<std::vector<int>> adjacency() const;
};

void check_graph(const Graph& graph);

// Greedy over ascending vertex ids; the result is independent and dominating.
std::vector<int> greedy_maximal_independent_set(const Graph& graph);

bool is_independent_dominating(const Graph& graph,
                               const std::vector<int>& vertex_set);

struct ReductionParams {
  double delta = 1.0;
  double gamma = 0.0;      // <= 0 resolves to delta / (10 n^2 + 5)
  double x_spacing = 0.0;  // <= 0 resolves to (2 n^2 + 2) * 3 delta
  bool two_polylines = false;
};

struct VertexGadget {
  int vertex = -1;
  int polyline = -1;
  int offset = 0;          // position of the gadget chain within its polyline
  std::vector<int> bends;  // 2n+2 global bend ids, chain order
};

struct EdgeGadget {
  int u = -1, v = -1;
  int polyline = -1;
  int offset = 0;
  std::vector<int> bends;  // 2n^2+5 ids; [1] and [size-2] are the shared squares
  double r = 0.0;          // inner x-step (along the gadget axis if tilted)
  bool tilted = false;
};

struct NeighborhoodGadget {
  int vertex = -1;
  int polyline = -1;
  int offset = 0;
  std::vector<int> bends;
  std::vector<int> shared_positions;  // chain positions of b_1..b_|Adj|
  std::vector<double> block_r;        // per zigzag block between b_i, b_i+1
  double span = 0.0;                  // t = |b_1 b_|Adj||
};

struct GadgetLayout {
  Graph graph;
  double delta = 1.0;
  double gamma = 0.0;
  double x_spacing = 0.0;
  bool two_polylines = false;
  std::vector<VertexGadget> vertex_gadgets;
  std::vector<EdgeGadget> edge_gadgets;
  std::vector<NeighborhoodGadget> neighborhood_gadgets;
  std::vector<int> connectors;

  int inner_run() const { return 2 * graph.n * graph.n + 1; }
};

// Builds the polyline bundle encoding the graph: one vertex gadget per
// vertex, one edge gadget per edge, one neighborhood gadget per vertex
// (2n + m polylines; two in two_polylines mode, joined by far-away
// connector bends). Throws GraphTooSmall for n < 2.
std::pair<PolylineBundle, GadgetLayout> build_pbs_from_graph(
    const Graph& graph, const ReductionParams& params);

struct EdgeClaimRecord {
  int index = -1;
  int extra_shortcuts = 0;  // beyond the three long ones, 0..4
};

struct ClaimReport {
  int vertex_gadgets = 0;
  int edge_gadgets = 0;
  int neighborhood_gadgets = 0;
  std::vector<EdgeClaimRecord> edge_records;
};

// Rebuilds every gadget sub-chain's shortcut graph at delta and checks the
// shortcut structure: vertex gadgets have exactly the one long shortcut,
// edge gadgets exactly the three long ones plus at most the four end
// shortcuts that skip a shared bend, neighborhood gadgets exactly the
// skip-one-shared family plus the endpoint/shared combinations minus
// (first,last). Throws ClaimViolation with the offending pair.
// strict re-evaluates every decision at an epsilon-widened threshold on both
// sides and fails on disagreement (boundary-indeterminate comparison).
ClaimReport verify_gadget_claims(const PolylineBundle& bundle,
                                 const GadgetLayout& layout,
                                 bool strict = false);

struct EdgeGadgetDistances {
  int index = -1;
  double r_prime = 0.0;
  double d1 = 0.0, d1_bound = 0.0;
  double d2 = 0.0, d2_closed = 0.0;
  double d3 = 0.0, d3_closed = 0.0, d3_lower = 0.0;
  double c_rprime = 0.0;
};

struct NeighborhoodGadgetDistances {
  int index = -1;
  double r_prime = 0.0;
  double d4 = 0.0;
  double d4_angle_form = 0.0;    // 3r sin(arctan(2/(5 r')))
  double d4_radical_form = 0.0;  // 6 delta / sqrt(25 - 4/r'^2)
};

struct AppendixReport {
  std::vector<EdgeGadgetDistances> edges;
  std::vector<NeighborhoodGadgetDistances> neighborhoods;
};

// Measures the critical gadget distances directly from coordinates and
// checks them against their closed forms (within 1e-9 * delta) and bounds.
// The d4 radical form is evaluated into the report but not enforced; the
// measured value is checked against the angle form it simplifies from.
// Throws FormulaMismatch on any enforced check.
AppendixReport verify_appendix_distances(const PolylineBundle& bundle,
                                         const GadgetLayout& layout);

// The canonical solution encoding an independent dominating set: vertex
// gadgets of the set keep all bends, all other gadgets keep endpoints only
// (plus connectors in two-polyline mode). Size 2n(|V'|+2) + 2m in standard
// mode. Throws NotIndependentDominating.
std::vector<int> corresponding_simplification(const GadgetLayout& layout,
                                              const std::vector<int>& vertex_set);

// Reads the encoded vertex set back from a simplification: if every inner
// run of every edge/neighborhood gadget is skipped and the read-off set is
// independent and dominating, returns it; otherwise falls back to the greedy
// maximal independent set.
std::vector<int> extract_mids(const GadgetLayout& layout,
                              const std::vector<int>& retained);

}  // namespace pbs
