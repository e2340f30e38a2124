#pragma once

#include <vector>

#include "pbs/geometry.hpp"

namespace pbs {

// Distance threshold plus the numeric slack used by every <= comparison
// against it. The gadget constructions sit exactly at distance delta, so
// boundary comparisons must be eps-inclusive.
struct ToleranceSpec {
  double delta = 1.0;
  double eps = 1e-9;

  static ToleranceSpec with_default_eps(double delta) {
    return {delta, 1e-9 * delta};
  }
};

// Throws InvariantViolation unless delta > 0 and 0 <= eps < delta.
void check_tolerance(const ToleranceSpec& tol);

// The instance: indexed bend coordinates plus polylines as index sequences.
// Sharing is by bend index only; coincident coordinates do not imply sharing.
struct PolylineBundle {
  std::vector<Point> bends;
  std::vector<std::vector<int>> polylines;

  int bend_count() const { return static_cast<int>(bends.size()); }
  int polyline_count() const { return static_cast<int>(polylines.size()); }

  // Coordinates of one polyline's chain, in order.
  std::vector<Point> chain(int polyline) const;
};

// Structural validation: indices in range, each polyline simple and of
// length >= 2, no isolated bends, finite coordinates.
void check_bundle(const PolylineBundle& bundle);

// Bend indices occurring in at least two polylines, ascending. |result| = k.
std::vector<int> shared_bends(const PolylineBundle& bundle);

// Endpoints (first/last index of every polyline), ascending, deduplicated.
std::vector<int> endpoint_bends(const PolylineBundle& bundle);

// Membership mask over bend indices for a retained set.
std::vector<char> retained_mask(const PolylineBundle& bundle,
                                const std::vector<int>& retained);

// Per polyline, the subsequence of its indices that are retained, in order.
// Throws MissingEndpoint if some polyline's first or last bend is absent.
std::vector<std::vector<int>> induced_simplification(
    const PolylineBundle& bundle, const std::vector<int>& retained);

struct Violation {
  int polyline = -1;
  int from_bend = -1;
  int to_bend = -1;
  double distance = 0.0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks every induced segment (a,b) of every simplified polyline against the
// corresponding sub-chain at threshold factor*delta + eps. factor = 2 accepts
// bi-criteria outputs.
ValidationReport validate_simplification(const PolylineBundle& bundle,
                                         const ToleranceSpec& tol,
                                         const std::vector<int>& retained,
                                         double factor = 1.0);

// Early-exit variant of validate_simplification (no distances computed).
bool is_valid_simplification(const PolylineBundle& bundle,
                             const ToleranceSpec& tol,
                             const std::vector<int>& retained,
                             double factor = 1.0);

}  // namespace pbs
