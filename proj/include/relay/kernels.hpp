#pragma once

// Hot loops with two interchangeable implementations. Exec::serial is the
// reference; Exec::parallel uses OpenMP when available and must return
// identical results.

#include <span>
#include <vector>

#include "relay/geometry.hpp"

namespace relay {

enum class Exec { serial, parallel };

/// For each candidate, the sorted distinct labels of sites within radius.
/// labels[i] is the label of sites[i].
std::vector<std::vector<int>> coverage_sets(std::span<const Point> candidates,
                                            std::span<const Point> sites,
                                            std::span<const int> labels, double radius,
                                            const Tolerance& tol = {},
                                            Exec exec = Exec::parallel);

struct ClosestPair {
  double d = 0.0;
  int a = -1;  // index into points, in the lower-numbered group
  int b = -1;
};

/// Closest cross pair for every unordered group pair (g, h), g < h, stored at
/// [g * groups + h]. Ties go to the lexicographically smallest (a, b). Entries
/// with a == -1 mean one of the groups is empty.
std::vector<ClosestPair> group_closest_pairs(std::span<const Point> points,
                                             std::span<const int> group_of, int groups,
                                             Exec exec = Exec::parallel);

/// Largest pairwise distance (0 for fewer than two points).
double max_pairwise_distance(std::span<const Point> points, Exec exec = Exec::parallel);

/// Number of worker threads a parallel kernel would use.
int kernel_threads();

}  // namespace relay
