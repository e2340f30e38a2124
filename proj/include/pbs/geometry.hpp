#pragma once

#include <algorithm>
#include <cmath>

namespace pbs {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::sqrt(norm2(p)); }
inline double dist(Point a, Point b) { return norm(a - b); }

// rotate by +90 degrees
inline Point perp(Point p) { return {-p.y, p.x}; }

inline double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = norm2(d);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return dist(p, a + t * d);
}

}  // namespace pbs
