#include "relay/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "relay/spatial_hash.hpp"

namespace relay {

namespace {

// Incremental grid used to drop near-duplicate points.
class Deduper {
 public:
  explicit Deduper(const Tolerance& tol) : tol_(tol), cell_(std::max(tol.eps, 1e-12) * 4.0) {}

  /// Inserts p unless an earlier point lies within eps; returns true if kept.
  bool insert(Point p) {
    const auto cx = static_cast<std::int64_t>(std::floor(p.x / cell_));
    const auto cy = static_cast<std::int64_t>(std::floor(p.y / cell_));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const Point& q : it->second) {
          if (tol_.same_point(p, q)) return false;
        }
      }
    }
    cells_[key(cx, cy)].push_back(p);
    return true;
  }

 private:
  static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) * 0x9E3779B97F4A7C15ULL) ^
           static_cast<std::uint64_t>(cy);
  }

  Tolerance tol_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<Point>> cells_;
};

}  // namespace

Point point_along(Point a, Point b, double t) {
  const double d = dist(a, b);
  if (d == 0.0) return a;
  return a + (t / d) * (b - a);
}

std::vector<Point> circle_intersections(Point c1, double r1, Point c2, double r2,
                                        const Tolerance& tol) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) {
    throw std::domain_error("circle_intersections: radii must be positive");
  }
  const double d = dist(c1, c2);
  if (d <= tol.eps) {
    throw std::domain_error("circle_intersections: coincident centers");
  }
  const Point u = (1.0 / d) * (c2 - c1);

  if (std::abs(d - (r1 + r2)) <= tol.eps) {
    return {c1 + r1 * u};
  }
  if (std::abs(d - std::abs(r1 - r2)) <= tol.eps) {
    return {r1 >= r2 ? c1 + r1 * u : c1 - r1 * u};
  }
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return {};

  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const Point base = c1 + a * u;
  const Point perp{-u.y, u.x};
  return {base + h * perp, base - h * perp};
}

std::vector<Point> candidate_points(std::span<const Point> centers, double radius,
                                    const Tolerance& tol) {
  std::vector<Point> out;
  Deduper seen(tol);
  for (const Point& c : centers) {
    if (seen.insert(c)) out.push_back(c);
  }
  if (centers.size() < 2) return out;

  SpatialHash grid(centers, 2.0 * radius);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (int j : grid.within(centers[i], 2.0 * radius, tol)) {
      if (j <= static_cast<int>(i)) continue;
      if (dist(centers[i], centers[j]) <= tol.eps) continue;  // duplicate sensor
      for (const Point& p : circle_intersections(centers[i], radius, centers[j], radius, tol)) {
        if (seen.insert(p)) out.push_back(p);
      }
    }
  }
  return out;
}

int coverage_depth(Point p, std::span<const Point> centers, double radius,
                   const Tolerance& tol) {
  int depth = 0;
  for (const Point& c : centers) {
    if (tol.within(dist(p, c), radius)) ++depth;
  }
  return depth;
}

std::vector<Point> dedup_points(std::span<const Point> pts, const Tolerance& tol) {
  std::vector<Point> out;
  Deduper seen(tol);
  for (const Point& p : pts) {
    if (seen.insert(p)) out.push_back(p);
  }
  return out;
}

std::vector<int> lex_order(std::span<const Point> pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lex_less(pts[a], pts[b]); });
  return order;
}

}  // namespace relay
