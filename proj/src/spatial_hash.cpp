#include "relay/spatial_hash.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace relay {

SpatialHash::SpatialHash(std::span<const Point> pts, double cell)
    : pts_(pts.begin(), pts.end()), cell_(cell) {
  if (!(cell > 0.0)) throw std::invalid_argument("SpatialHash: cell size must be positive");
  cells_.reserve(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    cells_[{cell_coord(pts_[i].x), cell_coord(pts_[i].y)}].push_back(static_cast<int>(i));
  }
}

std::int64_t SpatialHash::cell_coord(double v) const {
  return static_cast<std::int64_t>(std::floor(v / cell_));
}

std::vector<int> SpatialHash::within(Point q, double radius, const Tolerance& tol) const {
  std::vector<int> out;
  for_each_within(q, radius, tol, [&](int idx) { out.push_back(idx); });
  std::sort(out.begin(), out.end());
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
  parent_[b] = a;
  rank_size_[a] += rank_size_[b];
  --sets_;
  return true;
}

std::vector<int> DisjointSets::labels() {
  std::vector<int> root_label(parent_.size(), -1);
  std::vector<int> out(parent_.size());
  int next = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    const int root = find(static_cast<int>(i));
    if (root_label[root] < 0) root_label[root] = next++;
    out[i] = root_label[root];
  }
  return out;
}

std::vector<int> threshold_components(std::span<const Point> pts, double threshold,
                                      const Tolerance& tol) {
  DisjointSets sets(pts.size());
  if (!pts.empty()) {
    SpatialHash grid(pts, threshold);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      grid.for_each_within(pts[i], threshold, tol, [&](int j) {
        if (j > static_cast<int>(i)) sets.unite(static_cast<int>(i), j);
      });
    }
  }
  return sets.labels();
}

}  // namespace relay
