#include "relay/bruteforce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "relay/spatial_hash.hpp"

namespace relay {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Oracle {
  const Instance& inst;
  Tier tier;
  std::vector<Point> cand;
  std::size_t words = 0;
  std::vector<Bits> near_sensor;             // sensor -> candidates within 1
  std::vector<Bits> near_relay;              // candidate -> candidates within r
  std::vector<std::vector<int>> unit_cands;  // unit -> adjacent candidates
  std::vector<std::vector<int>> units;       // sensors of each unit
  std::vector<int> unit_of;                  // sensor -> unit

  static bool test(const Bits& b, int i) { return b[i / 64] >> (i % 64) & 1; }

  // Components of sensors + chosen relays; returns labels over n + k nodes.
  std::vector<int> components(const std::vector<int>& chosen) const {
    const std::size_t n = inst.sensors.size();
    DisjointSets sets(n + chosen.size());
    if (tier == Tier::one) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (inst.tol.within(dist(inst.sensors[i], inst.sensors[j]), 1.0)) {
            sets.unite(static_cast<int>(i), static_cast<int>(j));
          }
        }
      }
    }
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        if (test(near_sensor[i], chosen[a])) sets.unite(static_cast<int>(i), static_cast<int>(n + a));
      }
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        if (test(near_relay[chosen[a]], chosen[b])) {
          sets.unite(static_cast<int>(n + a), static_cast<int>(n + b));
        }
      }
    }
    return sets.labels();
  }

  bool feasible(const std::vector<int>& chosen) const {
    const std::vector<int> lab = components(chosen);
    const std::size_t n = inst.sensors.size();
    for (std::size_t i = 1; i < n; ++i) {
      if (lab[i] != lab[0]) return false;
    }
    if (tier == Tier::two) {
      for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        for (int c : chosen) hit = hit || test(near_sensor[i], c);
        if (!hit) return false;
      }
    }
    return true;
  }

  // Candidate that joins every sensor-bearing component when added, or -1.
  int completing(const std::vector<int>& chosen) const {
    const std::vector<int> lab = components(chosen);
    const std::size_t n = inst.sensors.size();
    std::vector<Bits> reach;
    std::vector<int> comp_slot(n + chosen.size(), -1);
    for (std::size_t i = 0; i < n; ++i) {
      int& slot = comp_slot[lab[i]];
      if (slot < 0) {
        slot = static_cast<int>(reach.size());
        reach.emplace_back(words, 0);
      }
      Bits& acc = reach[slot];
      // In the two-tier graph an uncovered sensor is alone in its component,
      // so requiring adjacency to each component also covers it.
      for (std::size_t w = 0; w < words; ++w) acc[w] |= near_sensor[i][w];
    }
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      const int slot = comp_slot[lab[n + a]];
      if (slot < 0) continue;
      for (std::size_t w = 0; w < words; ++w) reach[slot][w] |= near_relay[chosen[a]][w];
    }
    Bits all(words, ~std::uint64_t{0});
    for (const Bits& b : reach) {
      for (std::size_t w = 0; w < words; ++w) all[w] &= b[w];
    }
    if (tier == Tier::two) {
      // A sensor already linked to others still needs a relay of its own.
      for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        for (int c : chosen) hit = hit || test(near_sensor[i], c);
        if (!hit) {
          for (std::size_t w = 0; w < words; ++w) all[w] &= near_sensor[i][w];
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (all[w]) {
        const int idx = static_cast<int>(w * 64) + __builtin_ctzll(all[w]);
        return idx < static_cast<int>(cand.size()) ? idx : -1;
      }
    }
    return -1;
  }

  int untouched_unit(const std::vector<int>& chosen) const {
    int best = -1;
    for (std::size_t u = 0; u < units.size(); ++u) {
      bool touched = false;
      for (int c : chosen) {
        for (int s : units[u]) touched = touched || test(near_sensor[s], c);
        if (touched) break;
      }
      if (touched) continue;
      if (best < 0 || unit_cands[u].size() < unit_cands[best].size()) best = static_cast<int>(u);
    }
    return best;
  }

  // Candidates next to the current structure: within 1 of a sensor or r of a relay.
  // Some relay of a minimum solution is always adjacent, or the rest could be
  // dropped.
  std::vector<int> frontier(const std::vector<int>& chosen) const {
    Bits acc(words, 0);
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= near_sensor[i][w];
    }
    for (int c : chosen) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= near_relay[c][w];
    }
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cand.size()); ++i) {
      if (test(acc, i) && std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Branches at the current node: an untouched unit's candidates if one
  // exists, otherwise everything adjacent to the current structure.
  std::vector<int> branches(const std::vector<int>& chosen) const {
    const int u = untouched_unit(chosen);
    if (u >= 0) return unit_cands[u];
    return frontier(chosen);
  }

  bool dfs(std::vector<int>& chosen, int slots) const {
    if (slots == 1) {
      const int c = completing(chosen);
      if (c < 0) return false;
      chosen.push_back(c);
      return true;
    }
    for (int c : branches(chosen)) {
      chosen.push_back(c);
      if (dfs(chosen, slots - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<Point> bruteforce_candidates(const Instance& inst, std::size_t grid_cap) {
  const Tolerance& tol = inst.tol;
  std::vector<Point> raw = candidate_points(inst.sensors, 1.0, tol);
  const std::vector<Point> at_r = candidate_points(inst.sensors, inst.r, tol);
  raw.insert(raw.end(), at_r.begin(), at_r.end());

  double x0 = inst.sensors[0].x, x1 = x0, y0 = inst.sensors[0].y, y1 = y0;
  for (const Point& p : inst.sensors) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  x0 -= inst.r;
  y0 -= inst.r;
  x1 += inst.r;
  y1 += inst.r;
  double step = 0.25;
  auto count = [&](double s) {
    return static_cast<std::size_t>(std::floor((x1 - x0) / s) + 1) *
           static_cast<std::size_t>(std::floor((y1 - y0) / s) + 1);
  };
  while (count(step) > grid_cap) step *= 2.0;
  const auto nx = static_cast<long>(std::floor((x1 - x0) / step));
  const auto ny = static_cast<long>(std::floor((y1 - y0) / step));
  for (long i = 0; i <= nx; ++i) {
    for (long j = 0; j <= ny; ++j) raw.push_back({x0 + i * step, y0 + j * step});
  }

  std::vector<Point> sorted;
  for (int i : lex_order(raw)) sorted.push_back(raw[i]);
  return dedup_points(sorted, tol);
}

std::optional<RelaySet> optimum_bruteforce(const Instance& inst, int max_relays, Tier tier,
                                           Exec exec) {
  if (max_relays < 0 || max_relays > 4) {
    throw std::invalid_argument("optimum_bruteforce: max_relays must be in [0, 4]");
  }
  const Decomposition dec = build_decomposition(inst);
  Oracle o{inst, tier, bruteforce_candidates(inst), 0, {}, {}, {}, {}, {}};
  const std::size_t m = o.cand.size();
  o.words = (m + 63) / 64;

  auto to_bits = [&](const std::vector<int>& idx) {
    Bits b(o.words, 0);
    for (int i : idx) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
  };
  const SpatialHash grid(o.cand, inst.r);
  for (const Point& s : inst.sensors) o.near_sensor.push_back(to_bits(grid.within(s, 1.0, inst.tol)));
  o.near_relay.resize(m);
  const auto mm = static_cast<long>(m);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < mm; ++i) o.near_relay[i] = to_bits(grid.within(o.cand[i], inst.r, inst.tol));
  } else {
    for (long i = 0; i < mm; ++i) o.near_relay[i] = to_bits(grid.within(o.cand[i], inst.r, inst.tol));
  }

  // Units that each need a relay within 1: blobs (one-tier, several blobs) or
  // sensors (two-tier).
  if (tier == Tier::two) {
    for (std::size_t s = 0; s < inst.sensors.size(); ++s) o.units.push_back({static_cast<int>(s)});
  } else if (dec.blob_count() > 1) {
    o.units = dec.sensors_in_blob;
  }
  for (const auto& unit : o.units) {
    std::vector<int> cs;
    for (std::size_t c = 0; c < m; ++c) {
      bool hit = false;
      for (int s : unit) hit = hit || Oracle::test(o.near_sensor[s], static_cast<int>(c));
      if (hit) cs.push_back(static_cast<int>(c));
    }
    o.unit_cands.push_back(std::move(cs));
  }

  auto to_relays = [&](const std::vector<int>& chosen) {
    RelaySet rs;
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) rs.points.push_back({o.cand[c], Color::plain});
    return rs;
  };

  if (o.feasible({})) return RelaySet{};
  for (int size = 1; size <= max_relays; ++size) {
    if (size == 1) {
      const int c = o.completing({});
      if (c >= 0) return to_relays({c});
      continue;
    }
    const std::vector<int> top = o.branches({});
    const auto nt = static_cast<long>(top.size());
    std::vector<std::vector<int>> found(top.size());
    // Each top-level branch is searched independently; the lowest-index
    // success wins, which is what the serial loop returns.
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long t = 0; t < nt; ++t) {
        std::vector<int> chosen{top[t]};
        if (o.dfs(chosen, size - 1)) found[t] = chosen;
      }
    } else {
      for (long t = 0; t < nt; ++t) {
        std::vector<int> chosen{top[t]};
        if (o.dfs(chosen, size - 1)) {
          found[t] = chosen;
          break;
        }
      }
    }
    for (const auto& f : found) {
      if (!f.empty()) return to_relays(f);
    }
  }
  return std::nullopt;
}

}  // namespace relay
