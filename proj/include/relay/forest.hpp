#pragma once

#include <vector>

#include "relay/decomposition.hpp"
#include "relay/kernels.hpp"

namespace relay {

/// Shortest connection between two clouds, measured outside their unit disks.
struct Gap {
  double length = 0.0;  // max(0, d(u, v) - 2)
  double sensor_distance = 0.0;
  Point a;  // on segment uv at distance 1 from u
  Point b;  // on segment vu at distance 1 from v
  int u = -1;  // sensor of the first cloud
  int v = -1;  // sensor of the second cloud
};

/// Closest sensor pair (by distance, then indices) between every two clouds.
class CloudGaps {
 public:
  CloudGaps(const Instance& inst, const Decomposition& dec, Exec exec = Exec::parallel);

  int clouds() const { return clouds_; }
  /// Gap oriented from cloud g to cloud h (g != h).
  Gap at(int g, int h) const;

 private:
  int clouds_;
  std::vector<Gap> table_;  // g < h only
};

/// Throws std::invalid_argument when c1 == c2.
Gap cloud_distance(const Instance& inst, const Decomposition& dec, int c1, int c2);

struct ForestEdge {
  int from = -1;  // cloud or cluster id
  int to = -1;
  Point a;
  Point b;
  double length = 0.0;
  int weight = 0;  // relay count 2 + floor(length / r); 0 in plain MSFN plans
};

struct ForestPlan {
  std::vector<ForestEdge> edges;

  double total_length() const;
};

/// Minimum spanning tree over clouds with gap lengths (Kruskal; ties by ids).
ForestPlan msfn(const Instance& inst, const Decomposition& dec, const CloudGaps& gaps);
ForestPlan msfn(const Instance& inst, const Decomposition& dec);

/// Relays along an edge: both endpoints plus one every r units from a, with
/// coincident points merged. Consecutive gaps are at most r.
std::vector<Point> steinerize(const ForestEdge& e, double r, const Tolerance& tol = {});
/// 2 + floor(length / r): the count before merging coincident points.
int steiner_count(double length, double r);

struct ClusterState {
  std::vector<int> cluster_of;  // cloud -> cluster, numbered by smallest cloud
  std::vector<Point> green_relays;
  int initial_clusters = 0;
  int phase1_merges = 0;  // two clusters, two greens
  int phase2_merges = 0;  // three clusters, four greens
  int phase3_merges = 0;  // four clusters, six greens
  bool phase3_capped = false;

  int cluster_count() const;
  /// Drop in the number of clusters.
  int merges() const { return initial_clusters - cluster_count(); }
};

struct MergeOptions {
  bool phase2 = true;
  bool phase3 = true;
  long long pair_check_cap = 10'000'000;
};

/// Joins clouds into clusters with green relays. Phase 1 links clusters whose
/// clouds have sensors within r + 2 (greens at the gap endpoints). Phase 2
/// links three clusters through one point z whose (r+1)-disk reaches each of
/// them. Phase 3 links four clusters through two such points within r.
ClusterState merge_clusters_green(const Instance& inst, const Decomposition& dec,
                                  const CloudGaps& gaps, const MergeOptions& opts = {},
                                  Exec exec = Exec::parallel);

/// Spanning tree over clusters minimizing total relay count, where the
/// cluster-to-cluster gap is the shortest cloud gap across them.
ForestPlan msfn_prime(const Instance& inst, const Decomposition& dec, const CloudGaps& gaps,
                      const ClusterState& clusters);

}  // namespace relay
