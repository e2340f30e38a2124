#include "pbs/core.hpp"

#include <cmath>
#include <string>

#include "pbs/errors.hpp"
#include "pbs/frechet.hpp"

namespace pbs {

void check_tolerance(const ToleranceSpec& tol) {
  if (!(tol.delta > 0.0) || !std::isfinite(tol.delta)) {
    throw InvariantViolation("tolerance: delta must be finite and > 0");
  }
  if (!(tol.eps >= 0.0) || !(tol.eps < tol.delta)) {
    throw InvariantViolation("tolerance: eps must satisfy 0 <= eps < delta");
  }
}

std::vector<Point> PolylineBundle::chain(int polyline) const {
  const auto& poly = polylines.at(polyline);
  std::vector<Point> pts;
  pts.reserve(poly.size());
  for (int idx : poly) pts.push_back(bends[idx]);
  return pts;
}

void check_bundle(const PolylineBundle& bundle) {
  const int n = bundle.bend_count();
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(bundle.bends[i].x) || !std::isfinite(bundle.bends[i].y)) {
      throw InvariantViolation("bend " + std::to_string(i) +
                               " has non-finite coordinates");
    }
  }
  std::vector<char> used(n, 0);
  std::vector<char> seen(n, 0);
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    if (poly.size() < 2) {
      throw InvariantViolation("polyline " + std::to_string(li) +
                               " has fewer than 2 bends");
    }
    for (int idx : poly) {
      if (idx < 0 || idx >= n) {
        throw InvariantViolation("polyline " + std::to_string(li) +
                                 " references invalid bend index " +
                                 std::to_string(idx));
      }
      if (seen[idx]) {
        throw InvariantViolation("polyline " + std::to_string(li) +
                                 " repeats bend index " + std::to_string(idx));
      }
      seen[idx] = 1;
      used[idx] = 1;
    }
    for (int idx : poly) seen[idx] = 0;
  }
  for (int i = 0; i < n; ++i) {
    if (!used[i]) {
      throw InvariantViolation("bend " + std::to_string(i) +
                               " occurs in no polyline");
    }
  }
}

std::vector<int> shared_bends(const PolylineBundle& bundle) {
  std::vector<int> count(bundle.bend_count(), 0);
  for (const auto& poly : bundle.polylines) {
    for (int idx : poly) ++count[idx];
  }
  std::vector<int> result;
  for (int i = 0; i < bundle.bend_count(); ++i) {
    if (count[i] >= 2) result.push_back(i);
  }
  return result;
}

std::vector<int> endpoint_bends(const PolylineBundle& bundle) {
  std::vector<char> mark(bundle.bend_count(), 0);
  for (const auto& poly : bundle.polylines) {
    mark[poly.front()] = 1;
    mark[poly.back()] = 1;
  }
  std::vector<int> result;
  for (int i = 0; i < bundle.bend_count(); ++i) {
    if (mark[i]) result.push_back(i);
  }
  return result;
}

std::vector<char> retained_mask(const PolylineBundle& bundle,
                                const std::vector<int>& retained) {
  std::vector<char> mask(bundle.bend_count(), 0);
  for (int idx : retained) {
    if (idx < 0 || idx >= bundle.bend_count()) {
      throw InvariantViolation("retained set references invalid bend index " +
                               std::to_string(idx));
    }
    mask[idx] = 1;
  }
  return mask;
}

namespace {

void require_endpoints(const PolylineBundle& bundle,
                       const std::vector<char>& mask) {
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    if (!mask[poly.front()] || !mask[poly.back()]) {
      throw MissingEndpoint("polyline " + std::to_string(li) +
                            " is missing a retained endpoint");
    }
  }
}

// Walks one polyline's induced segments, invoking fn(from_pos, to_pos).
// Returns false as soon as fn does.
template <typename Fn>
bool for_each_induced_segment(const std::vector<int>& poly,
                              const std::vector<char>& mask, Fn&& fn) {
  int prev = 0;  // position of the previous retained bend; front is retained
  for (int pos = 1; pos < static_cast<int>(poly.size()); ++pos) {
    if (!mask[poly[pos]]) continue;
    if (!fn(prev, pos)) return false;
    prev = pos;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> induced_simplification(
    const PolylineBundle& bundle, const std::vector<int>& retained) {
  const auto mask = retained_mask(bundle, retained);
  require_endpoints(bundle, mask);
  std::vector<std::vector<int>> result;
  result.reserve(bundle.polylines.size());
  for (const auto& poly : bundle.polylines) {
    std::vector<int> simplified;
    for (int idx : poly) {
      if (mask[idx]) simplified.push_back(idx);
    }
    result.push_back(std::move(simplified));
  }
  return result;
}

ValidationReport validate_simplification(const PolylineBundle& bundle,
                                         const ToleranceSpec& tol,
                                         const std::vector<int>& retained,
                                         double factor) {
  if (!(factor >= 1.0)) {
    throw InvariantViolation("validation factor must be >= 1");
  }
  const auto mask = retained_mask(bundle, retained);
  require_endpoints(bundle, mask);

  ValidationReport report;
  std::vector<Point> chain;
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    for_each_induced_segment(poly, mask, [&](int from, int to) {
      chain.clear();
      for (int pos = from; pos <= to; ++pos) chain.push_back(bundle.bends[poly[pos]]);
      const Point a = chain.front();
      const Point b = chain.back();
      if (!segment_chain_within(a, b, chain, factor * tol.delta, tol.eps)) {
        report.valid = false;
        report.violations.push_back({li, poly[from], poly[to],
                                     segment_chain_distance(a, b, chain)});
      }
      return true;
    });
  }
  return report;
}

bool is_valid_simplification(const PolylineBundle& bundle,
                             const ToleranceSpec& tol,
                             const std::vector<int>& retained, double factor) {
  const auto mask = retained_mask(bundle, retained);
  for (const auto& poly : bundle.polylines) {
    if (!mask[poly.front()] || !mask[poly.back()]) return false;
  }
  std::vector<Point> chain;
  for (int li = 0; li < bundle.polyline_count(); ++li) {
    const auto& poly = bundle.polylines[li];
    const bool ok = for_each_induced_segment(poly, mask, [&](int from, int to) {
      chain.clear();
      for (int pos = from; pos <= to; ++pos) chain.push_back(bundle.bends[poly[pos]]);
      return segment_chain_within(chain.front(), chain.back(), chain,
                                  factor * tol.delta, tol.eps);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace pbs
