#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relay/geometry.hpp"

namespace relay {

/// Uniform grid over a fixed point set. Queries return indices into the point
/// set the grid was built from; the grid holds a copy of the coordinates.
class SpatialHash {
 public:
  SpatialHash(std::span<const Point> pts, double cell);

  /// Indices of points with dist(p, q) <= radius + eps, ascending.
  std::vector<int> within(Point q, double radius, const Tolerance& tol = {}) const;

  /// Calls f(index) for every point within radius of q, in no particular order.
  template <class F>
  void for_each_within(Point q, double radius, const Tolerance& tol, F&& f) const {
    const double reach = radius + tol.eps;
    const std::int64_t x0 = cell_coord(q.x - reach);
    const std::int64_t x1 = cell_coord(q.x + reach);
    const std::int64_t y0 = cell_coord(q.y - reach);
    const std::int64_t y1 = cell_coord(q.y + reach);
    for (std::int64_t cx = x0; cx <= x1; ++cx) {
      for (std::int64_t cy = y0; cy <= y1; ++cy) {
        auto it = cells_.find({cx, cy});
        if (it == cells_.end()) continue;
        for (int idx : it->second) {
          if (dist(pts_[idx], q) <= reach) f(idx);
        }
      }
    }
  }

  const std::vector<Point>& points() const { return pts_; }
  double cell() const { return cell_; }

 private:
  using Cell = std::pair<std::int64_t, std::int64_t>;
  struct CellHash {
    std::size_t operator()(const Cell& c) const {
      return static_cast<std::size_t>((static_cast<std::uint64_t>(c.first) * 0x9E3779B97F4A7C15ULL) ^
                                      static_cast<std::uint64_t>(c.second));
    }
  };

  std::int64_t cell_coord(double v) const;

  std::vector<Point> pts_;
  double cell_;
  std::unordered_map<Cell, std::vector<int>, CellHash> cells_;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  int find(int a);
  /// Returns true when a and b were in different sets.
  bool unite(int a, int b);
  std::size_t size() const { return parent_.size(); }
  std::size_t set_count() const { return sets_; }

  /// Component label per element, numbered 0.. in order of each component's
  /// smallest element.
  std::vector<int> labels();

 private:
  std::vector<int> parent_;
  std::vector<int> rank_size_;
  std::size_t sets_;
};

/// Components of the graph joining points at distance <= threshold (tolerant).
/// Labels follow DisjointSets::labels numbering.
std::vector<int> threshold_components(std::span<const Point> pts, double threshold,
                                      const Tolerance& tol = {});

}  // namespace relay
