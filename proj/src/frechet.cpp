#include "pbs/frechet.hpp"

#include "pbs/errors.hpp"

namespace pbs {

namespace {

struct Interval {
  double lo = 1.0;
  double hi = 0.0;  // lo > hi means empty
};

// Positions t in [0,1] on segment a+t(b-a) with |a+t(b-a) - p| <= d.
Interval disc_interval(Point a, Point b, Point p, double d) {
  const Point dir = b - a;
  const double len2 = norm2(dir);
  if (len2 == 0.0) {
    if (dist(a, p) <= d) return {0.0, 1.0};
    return {};
  }
  const Point ap = p - a;
  const double m = dot(dir, ap);
  const double disc = m * m - len2 * (norm2(ap) - d * d);
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  const double lo = std::max((m - root) / len2, 0.0);
  const double hi = std::min((m + root) / len2, 1.0);
  if (lo > hi) return {};
  return {lo, hi};
}

}  // namespace

bool segment_chain_within(Point a, Point b, std::span<const Point> chain,
                          double delta, double eps) {
  if (chain.size() < 2) {
    throw DegenerateChain("segment_chain_within: chain needs >= 2 points");
  }
  const double d = delta + eps;
  if (dist(a, chain.front()) > d || dist(b, chain.back()) > d) return false;
  double low = 0.0;
  for (const Point& p : chain) {
    const Interval iv = disc_interval(a, b, p, d);
    if (iv.lo > iv.hi) return false;
    low = std::max(low, iv.lo);
    if (low > iv.hi) return false;
  }
  return true;
}

double segment_chain_distance(Point a, Point b, std::span<const Point> chain) {
  if (chain.size() < 2) {
    throw DegenerateChain("segment_chain_distance: chain needs >= 2 points");
  }
  double hi = 0.0;
  for (const Point& p : chain) {
    hi = std::max({hi, dist(p, a), dist(p, b)});
  }
  if (segment_chain_within(a, b, chain, 0.0)) return 0.0;
  double lo = 0.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-9 * (1.0 + lo); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (segment_chain_within(a, b, chain, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace pbs
