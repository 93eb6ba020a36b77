#include "relay/verify.hpp"

#include <algorithm>
#include <cmath>

#include "relay/cover_search.hpp"
#include "relay/forest.hpp"
#include "relay/placement.hpp"
#include "relay/spatial_hash.hpp"

namespace relay {

Feasibility check_points(const Instance& inst, const std::vector<Point>& relays, Tier tier) {
  const Tolerance& tol = inst.tol;
  const std::size_t n = inst.sensors.size();
  const std::size_t m = relays.size();
  Feasibility out;
  out.relays = m;
  DisjointSets sets(n + m);

  if (tier == Tier::one && n > 1) {
    const SpatialHash sensor_grid(inst.sensors, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      sensor_grid.for_each_within(inst.sensors[i], 1.0, tol, [&](int j) {
        if (j > static_cast<int>(i)) sets.unite(static_cast<int>(i), j);
      });
    }
  }

  std::vector<char> covered(n, 0);
  if (m > 0) {
    const SpatialHash relay_grid(relays, inst.r);
    for (std::size_t k = 0; k < m; ++k) {
      relay_grid.for_each_within(relays[k], inst.r, tol, [&](int j) {
        if (j > static_cast<int>(k)) sets.unite(static_cast<int>(n + k), static_cast<int>(n) + j);
      });
    }
    for (std::size_t i = 0; i < n; ++i) {
      relay_grid.for_each_within(inst.sensors[i], 1.0, tol, [&](int j) {
        sets.unite(static_cast<int>(i), static_cast<int>(n) + j);
        covered[i] = 1;
      });
    }
  }

  out.feasible = true;
  if (tier == Tier::two) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!covered[i]) {
        out.feasible = false;
        out.uncovered = static_cast<int>(i);
        break;
      }
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sets.find(0) != sets.find(static_cast<int>(i))) {
      out.feasible = false;
      out.disconnected = std::pair{0, static_cast<int>(i)};
      break;
    }
  }
  return out;
}

Feasibility check_feasibility(const Instance& inst, const RelaySet& relays, Tier tier,
                              std::uint64_t limit) {
  return check_points(inst, expand_relays(relays, limit, inst.tol), tier);
}

bool check_one_tier(const Instance& inst, const RelaySet& relays, std::uint64_t limit) {
  return check_feasibility(inst, relays, Tier::one, limit).feasible;
}

bool check_two_tier(const Instance& inst, const RelaySet& relays, std::uint64_t limit) {
  return check_feasibility(inst, relays, Tier::two, limit).feasible;
}

BoundsReport lower_bounds(const Instance& inst, double exact_stab_limit) {
  const Decomposition dec = build_decomposition(inst);
  BoundsReport rep;
  rep.clouds = dec.cloud_count();
  rep.blobs = dec.blob_count();
  if (rep.blobs <= 1) {
    rep.exact_clouds = rep.clouds;
    return rep;
  }

  const CloudGaps gaps(inst, dec);
  rep.msfn_length = msfn(inst, dec, gaps).total_length();
  const double forest = std::sqrt(3.0) / 2.0 * rep.msfn_length / inst.r;
  rep.lb_forest = static_cast<long long>(std::ceil(forest - 1e-9));

  const StabSet greedy = greedy_stabs(inst, dec);
  rep.greedy_stabs = static_cast<long long>(greedy.size());
  bool all_exact = true;
  for (int c = 0; c < dec.cloud_count(); ++c) {
    const int g = static_cast<int>(stabs_in_cloud(greedy, dec, c).size());
    if (g <= 1) {
      rep.lb_stab += g;
      ++rep.exact_clouds;
      continue;
    }
    const std::vector<int>& blobs = dec.blobs_in_cloud[c];
    const BlobCandidates cand = blob_candidates(inst, dec, dec.sensors_in_cloud[c]);
    std::vector<std::vector<int>> sets;
    for (const auto& bs : cand.blobs) {
      std::vector<int> local;
      for (int b : bs) {
        local.push_back(static_cast<int>(std::lower_bound(blobs.begin(), blobs.end(), b) -
                                         blobs.begin()));
      }
      sets.push_back(std::move(local));
    }
    const CoverSearch found =
        min_set_cover(sets, static_cast<int>(blobs.size()), g - 1, exact_stab_limit);
    if (found.over_budget) {
      all_exact = false;
      rep.lb_stab += (60LL * g + 136) / 137;
    } else {
      rep.lb_stab += found.chosen ? static_cast<long long>(found.chosen->size()) : g;
      ++rep.exact_clouds;
    }
  }
  rep.stab_mode = all_exact ? "exact" : "greedy-derived";
  rep.lb_clouds = rep.clouds > 1 ? rep.clouds : 0;
  rep.max_lower_bound = std::max({rep.lb_forest, rep.lb_stab, rep.lb_clouds});
  return rep;
}

}  // namespace relay
