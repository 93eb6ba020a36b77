#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relay/decomposition.hpp"
#include "relay/relay_set.hpp"

namespace relay {

/// One-tier: sensors may talk to each other directly. Two-tier: every path
/// between sensors runs through relays.
enum class Tier { one, two };

struct Feasibility {
  bool feasible = false;
  std::size_t relays = 0;  // distinct relays after expansion
  /// Sensor 0 and the smallest sensor not reachable from it.
  std::optional<std::pair<int, int>> disconnected;
  /// Two-tier only: a sensor with no relay within 1.
  std::optional<int> uncovered;
};

/// Connectivity of sensors plus explicit relay points. Links: sensor-sensor
/// <= 1 (one-tier only), sensor-relay <= 1, relay-relay <= r.
Feasibility check_points(const Instance& inst, const std::vector<Point>& relays, Tier tier);

/// Expands chains (LimitError past limit) and checks connectivity.
Feasibility check_feasibility(const Instance& inst, const RelaySet& relays, Tier tier,
                              std::uint64_t limit = kDefaultExpandLimit);

bool check_one_tier(const Instance& inst, const RelaySet& relays,
                    std::uint64_t limit = kDefaultExpandLimit);
bool check_two_tier(const Instance& inst, const RelaySet& relays,
                    std::uint64_t limit = kDefaultExpandLimit);

struct BoundsReport {
  long long lb_forest = 0;   // ceil((sqrt(3)/2) * |MSFN| / r)
  long long lb_stab = 0;     // minimum stabbing, or its greedy-derived floor
  long long lb_clouds = 0;   // |C| when there is more than one cloud
  long long max_lower_bound = 0;
  std::string stab_mode = "exact";  // "exact" or "greedy-derived"
  double msfn_length = 0.0;
  long long greedy_stabs = 0;
  int exact_clouds = 0;  // clouds whose stabbing number was found exactly
  int clouds = 0;
  int blobs = 0;
};

inline constexpr double kExactStabLimit = 1e7;

/// Lower bounds on the number of relays in any one-tier solution (and hence
/// any two-tier one). The stabbing number of a cloud is computed exactly when
/// the subset search below the greedy count fits under exact_stab_limit;
/// otherwise ceil(60 * greedy / 137) is used for that cloud. All bounds are 0
/// for single-blob instances.
BoundsReport lower_bounds(const Instance& inst, double exact_stab_limit = kExactStabLimit);

}  // namespace relay
