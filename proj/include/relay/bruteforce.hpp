#pragma once

#include <optional>
#include <vector>

#include "relay/decomposition.hpp"
#include "relay/kernels.hpp"
#include "relay/relay_set.hpp"
#include "relay/verify.hpp"

namespace relay {

/// Relay positions the oracle may use: arrangement vertices at radius 1 and r,
/// the sensors, and a grid over the bounding box grown by r (spacing 0.25,
/// coarsened by doubling until it has at most grid_cap points). Deduplicated
/// and in lexicographic order.
std::vector<Point> bruteforce_candidates(const Instance& inst, std::size_t grid_cap = 10'000);

/// Smallest feasible subset of bruteforce_candidates with at most max_relays
/// points, or nullopt if none exists. Restricted to candidates, so the answer
/// is an upper bound on the unrestricted optimum. max_relays must be <= 4.
std::optional<RelaySet> optimum_bruteforce(const Instance& inst, int max_relays, Tier tier,
                                           Exec exec = Exec::parallel);

}  // namespace relay
