#pragma once

#include <optional>
#include <vector>

#include "relay/decomposition.hpp"
#include "relay/kernels.hpp"

namespace relay {

/// Candidate locations with the blobs each one touches (within distance 1 of
/// a blob sensor). Points are in lexicographic order, ties in generation order.
struct BlobCandidates {
  std::vector<Point> points;
  std::vector<std::vector<int>> blobs;  // ascending blob ids per point
};

/// Candidates from the unit circles about the given sensors.
BlobCandidates blob_candidates(const Instance& inst, const Decomposition& dec,
                               const std::vector<int>& sensor_ids, Exec exec = Exec::parallel);

struct StabSet {
  std::vector<Point> points;
  std::vector<std::vector<int>> covered;  // blob ids hit by each point
  std::vector<int> gains;                 // newly stabbed blobs per greedy pick (greedy only)

  std::size_t size() const { return points.size(); }
};

/// Greedy set cover over all blobs: repeatedly takes the candidate that hits
/// the most unstabbed blobs, first in lexicographic order on ties.
StabSet greedy_stabs(const Instance& inst, const Decomposition& dec, Exec exec = Exec::parallel);

/// Stabs of a StabSet that lie in the given cloud. A stab never touches two
/// clouds, since two sensors within 1 of a common point are within 2.
StabSet stabs_in_cloud(const StabSet& stabs, const Decomposition& dec, int cloud);

inline constexpr double kExactStabBudget = 1e7;

/// Minimum stabbing of the cloud's blobs if one with fewer than k points
/// exists. Returns nullopt when every stabbing needs k or more points, or when
/// C(candidates, k-1) exceeds budget after removing dominated candidates.
std::optional<StabSet> exact_stabs(const Instance& inst, const Decomposition& dec, int cloud,
                                   int k, double budget = kExactStabBudget,
                                   Exec exec = Exec::parallel);

struct HubSet {
  std::vector<Point> points;  // the stabs first, then merge points
  int merges = 0;
};

/// Turns stabs of a cloud into hubs that connect it: while sensors and hubs
/// (links of length <= 1) form several components, a hub goes at the midpoint
/// of the first sensor pair (i, j), by cloud order, at distance <= 2 that
/// spans two components.
///
/// Throws std::invalid_argument if some blob of the cloud has no stab.
HubSet stabs_to_hubs(const Instance& inst, const Decomposition& dec, int cloud,
                     const StabSet& stabs);

/// Greedy stitching of one cloud. Starts from its smallest blob and adds the
/// candidate touching the grown set that reaches the most new blobs.
std::vector<Point> stitch_cloud(const Instance& inst, const Decomposition& dec, int cloud,
                                Exec exec = Exec::parallel);

}  // namespace relay
