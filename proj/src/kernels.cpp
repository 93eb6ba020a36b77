#include "relay/kernels.hpp"

#include <algorithm>
#include <tuple>

#include "relay/spatial_hash.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

namespace {

bool better(const ClosestPair& x, const ClosestPair& y) {
  if (y.a < 0) return x.a >= 0;
  if (x.a < 0) return false;
  return std::tie(x.d, x.a, x.b) < std::tie(y.d, y.a, y.b);
}

std::vector<int> labels_near(const SpatialHash& grid, std::span<const int> labels, Point q,
                             double radius, const Tolerance& tol) {
  std::vector<int> out;
  grid.for_each_within(q, radius, tol, [&](int idx) { out.push_back(labels[idx]); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void scan_row(std::span<const Point> points, std::span<const int> group_of, int groups,
              std::size_t i, std::vector<ClosestPair>& best) {
  for (std::size_t j = i + 1; j < points.size(); ++j) {
    int g = group_of[i];
    int h = group_of[j];
    if (g == h) continue;
    int a = static_cast<int>(i);
    int b = static_cast<int>(j);
    if (g > h) {
      std::swap(g, h);
      std::swap(a, b);
    }
    const ClosestPair cand{dist(points[i], points[j]), a, b};
    ClosestPair& slot = best[static_cast<std::size_t>(g) * groups + h];
    if (better(cand, slot)) slot = cand;
  }
}

}  // namespace

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::vector<int>> coverage_sets(std::span<const Point> candidates,
                                            std::span<const Point> sites,
                                            std::span<const int> labels, double radius,
                                            const Tolerance& tol, Exec exec) {
  std::vector<std::vector<int>> out(candidates.size());
  if (sites.empty()) return out;
  const SpatialHash grid(sites, radius);
  const auto n = static_cast<long>(candidates.size());

  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = labels_near(grid, labels, candidates[i], radius, tol);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) out[i] = labels_near(grid, labels, candidates[i], radius, tol);
  return out;
}

std::vector<ClosestPair> group_closest_pairs(std::span<const Point> points,
                                             std::span<const int> group_of, int groups,
                                             Exec exec) {
  const std::size_t slots = static_cast<std::size_t>(groups) * groups;
  std::vector<ClosestPair> best(slots);
  const auto n = static_cast<long>(points.size());

  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) scan_row(points, group_of, groups, i, best);
    return best;
  }

#pragma omp parallel
  {
    std::vector<ClosestPair> local(slots);
#pragma omp for schedule(dynamic, 16) nowait
    for (long i = 0; i < n; ++i) scan_row(points, group_of, groups, i, local);
    // (d, a, b) is a total order, so the merged minimum does not depend on
    // which thread finishes first.
#pragma omp critical(relay_closest_merge)
    for (std::size_t s = 0; s < slots; ++s) {
      if (better(local[s], best[s])) best[s] = local[s];
    }
  }
  return best;
}

double max_pairwise_distance(std::span<const Point> points, Exec exec) {
  const auto n = static_cast<long>(points.size());
  double best = 0.0;
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) best = std::max(best, dist(points[i], points[j]));
    }
    return best;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) best = std::max(best, dist(points[i], points[j]));
  }
  return best;
}

}  // namespace relay
