#pragma once

#include <span>

#include "pbs/geometry.hpp"

namespace pbs {

// Decides d_Frechet((a,b), chain) <= delta + eps for a single line segment
// against a polyline chain. Linear in the chain length: the free space of a
// disc against the segment's parameterization is one convex interval per
// chain vertex, so a forward sweep over the running maximum of lower bounds
// is exact.
//
// Throws DegenerateChain if the chain has fewer than 2 points. A zero-length
// segment (a == b) reduces to "all chain vertices within delta of a".
bool segment_chain_within(Point a, Point b, std::span<const Point> chain,
                          double delta, double eps = 0.0);

// Frechet distance value by bisection over the decision procedure.
// Result d satisfies |d - d_Frechet| <= 1e-9 * (1 + d).
double segment_chain_distance(Point a, Point b, std::span<const Point> chain);

}  // namespace pbs
