#pragma once

/// \file
/// \brief Planar primitives shared by every stage of the relay pipeline.
///
/// Distances are measured in units of the sensor communication range, so a
/// unit disk about a sensor is exactly the region it can talk to. All disk
/// membership tests are closed and carry an additive slack (`Tolerance`),
/// because arrangement vertices sit exactly on circle boundaries.

#include <cmath>
#include <span>
#include <vector>

namespace relay {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double norm(Point p) { return std::hypot(p.x, p.y); }

/// Euclidean distance.
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Lexicographic (x, then y) order used for every deterministic tie-break.
inline bool lex_less(Point a, Point b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Absolute slack applied to all distance comparisons: `d <= t` is tested as
/// `d <= t + eps`.
struct Tolerance {
  double eps = 1e-9;

  bool within(double d, double t) const { return d <= t + eps; }
  bool same_point(Point a, Point b) const { return dist(a, b) <= eps; }
};

/// Point on segment a->b at arc length `t` from a. Returns a when a == b.
Point point_along(Point a, Point b, double t);

/// Intersection points of two circles, 0 to 2 of them. Tangency (external or
/// internal, within tolerance) yields exactly one point.
///
/// Throws std::domain_error when the centers coincide within tolerance or a
/// radius is not positive.
std::vector<Point> circle_intersections(Point c1, double r1, Point c2, double r2,
                                        const Tolerance& tol = {});

/// Candidate points for the arrangement of equal-radius closed disks: every
/// center plus every pairwise circle intersection, deduplicated within eps.
/// Centers come first in input order, then intersections in (i, j) pair order.
///
/// For closed disks every achievable coverage set over the plane is contained
/// in the coverage set of some returned point.
std::vector<Point> candidate_points(std::span<const Point> centers, double radius,
                                    const Tolerance& tol = {});

/// Number of centers within `radius` (closed, tolerant) of p.
int coverage_depth(Point p, std::span<const Point> centers, double radius,
                   const Tolerance& tol = {});

/// Removes points that lie within eps of an earlier point, preserving order.
std::vector<Point> dedup_points(std::span<const Point> pts, const Tolerance& tol = {});

/// Indices that sort points lexicographically; ties keep input order.
std::vector<int> lex_order(std::span<const Point> pts);

}  // namespace relay
