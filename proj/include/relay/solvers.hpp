#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relay/decomposition.hpp"
#include "relay/kernels.hpp"
#include "relay/relay_set.hpp"
#include "relay/verify.hpp"

namespace relay {

/// A checked inequality or identity: holds == (lhs <= rhs) for bounds, or
/// lhs == rhs for identities.
struct Certificate {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

/// How one cloud was handled.
struct CloudRecord {
  int cloud = -1;
  int blobs = 0;
  std::string method;  // "greedy-stabs", "exact-stabs" or "stitch"
  int stabs = 0;
  int red = 0;
};

struct SolveReport {
  std::string algorithm;
  Tier tier = Tier::one;
  long long relay_count = 0;    // distinct relays after expansion
  long long nominal_count = 0;  // before merging coincident relays
  long long stabs = 0;
  long long red = 0;
  long long green = 0;
  long long yellow = 0;
  long long plain = 0;
  int clouds = 0;
  int blobs = 0;
  int clusters = 0;
  long long forest_relays_raw = 0;
  std::vector<CloudRecord> cloud_records;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  double wall_time_ms = 0.0;  // not part of the written report

  bool all_certificates_hold() const;
};

struct Solution {
  RelaySet relays;
  SolveReport report;
};

struct SolverOptions {
  int k = 3;   // greedy: exact stabbing below k points
  int m = 4;   // sparse two-tier grid parameter
  Exec exec = Exec::parallel;
};

/// Greedy stabs, hubs per cloud, and a Steinerized spanning forest.
Solution solve_one_tier_simple(const Instance& inst, const SolverOptions& opts = {});

/// Exact stabbing for clouds needing fewer than k stabs, stitching for the
/// rest, green cluster merging, then a relay-weighted spanning forest.
Solution solve_one_tier_greedy(const Instance& inst, const SolverOptions& opts = {});

struct Sparsity {
  bool sparse = false;
  double D = 0.0;  // sensor diameter minus 1
  double threshold = 0.0;  // m * n * r
};

/// Sparse when D >= m n r, inclusive.
Sparsity is_sparse(const Instance& inst, int m, Exec exec = Exec::parallel);

/// Grid rounding with spacing D / (n m), a spanning tree over the rounded
/// sensors replaced by relay chains, and a chain from each sensor to its grid
/// point. Throws std::domain_error on dense instances or n < 2.
Solution solve_two_tier_sparse(const Instance& inst, const SolverOptions& opts = {});

/// Greedy unit-disk cover of the sensors, then chains along a minimum
/// spanning tree of the cover relays.
Solution solve_two_tier_cover_connect(const Instance& inst, const SolverOptions& opts = {});

/// Names accepted by solve(): one-tier-simple, one-tier-greedy,
/// two-tier-sparse, two-tier-cover.
const std::vector<std::string>& algorithm_names();
Tier algorithm_tier(const std::string& name);
/// Throws std::invalid_argument for an unknown name.
Solution solve(const std::string& algorithm, const Instance& inst, const SolverOptions& opts = {});

}  // namespace relay
