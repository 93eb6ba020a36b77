#include "relay/forest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "relay/spatial_hash.hpp"

namespace relay {

namespace {

Gap make_gap(const Instance& inst, int u, int v) {
  const Point pu = inst.sensors[u];
  const Point pv = inst.sensors[v];
  Gap g;
  g.u = u;
  g.v = v;
  g.sensor_distance = dist(pu, pv);
  g.a = point_along(pu, pv, 1.0);
  g.b = point_along(pv, pu, 1.0);
  // Measured between the endpoints so relay chains and counts agree exactly.
  g.length = g.sensor_distance > 2.0 ? dist(g.a, g.b) : 0.0;
  return g;
}

Gap flipped(Gap g) {
  std::swap(g.a, g.b);
  std::swap(g.u, g.v);
  return g;
}

int normalize(std::vector<int>& labels) {
  std::map<int, int> renumber;
  for (int& l : labels) {
    auto [it, fresh] = renumber.try_emplace(l, static_cast<int>(renumber.size()));
    l = it->second;
  }
  return static_cast<int>(renumber.size());
}

// Cluster bookkeeping over clouds.
struct Clusters {
  DisjointSets sets;
  explicit Clusters(int clouds) : sets(clouds) {}
  int of(int cloud) { return sets.find(cloud); }
};

// Clusters reached from z: for each, the closest sensor (distance, index).
struct Reach {
  int cluster;
  double d;
  int sensor;
};

std::vector<Reach> reach_from(Point z, const SpatialHash& grid, const Decomposition& dec,
                              Clusters& cl, double radius, const Tolerance& tol) {
  std::vector<Reach> best;
  grid.for_each_within(z, radius, tol, [&](int s) {
    const int c = cl.of(dec.cloud_of[s]);
    const double d = dist(z, grid.points()[s]);
    auto it = std::find_if(best.begin(), best.end(), [&](const Reach& r) { return r.cluster == c; });
    if (it == best.end()) {
      best.push_back({c, d, s});
    } else if (std::tie(d, s) < std::tie(it->d, it->sensor)) {
      it->d = d;
      it->sensor = s;
    }
  });
  std::sort(best.begin(), best.end(), [](const Reach& x, const Reach& y) {
    return std::tie(x.d, x.sensor) < std::tie(y.d, y.sensor);
  });
  return best;
}

std::vector<int> clusters_of(const std::vector<int>& clouds, Clusters& cl) {
  std::vector<int> out;
  for (int c : clouds) out.push_back(cl.of(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Whether two clusters reached from z1 and two others reached from z2 exist.
bool four_way_possible(const std::vector<int>& clouds1, const std::vector<int>& clouds2,
                       Clusters& cl) {
  const std::vector<int> s1 = clusters_of(clouds1, cl);
  if (s1.size() < 2) return false;
  const std::vector<int> s2 = clusters_of(clouds2, cl);
  if (s2.size() < 2) return false;
  int shared = 0;
  for (int c : s1) shared += std::binary_search(s2.begin(), s2.end(), c);
  const int only1 = static_cast<int>(s1.size()) - shared;
  const int only2 = static_cast<int>(s2.size()) - shared;
  // Each side takes its exclusive clusters first and tops up from the shared ones.
  return std::max(0, 2 - only1) + std::max(0, 2 - only2) <= shared;
}

// Relay near sensor u on the way to z: within 1 of u and within r of z.
Point attach_point(Point u, Point z) { return point_along(u, z, std::min(1.0, dist(u, z))); }

}  // namespace

CloudGaps::CloudGaps(const Instance& inst, const Decomposition& dec, Exec exec)
    : clouds_(dec.cloud_count()) {
  const std::vector<ClosestPair> pairs =
      group_closest_pairs(inst.sensors, dec.cloud_of, clouds_, exec);
  table_.resize(pairs.size());
  for (int g = 0; g < clouds_; ++g) {
    for (int h = g + 1; h < clouds_; ++h) {
      const ClosestPair& cp = pairs[static_cast<std::size_t>(g) * clouds_ + h];
      table_[static_cast<std::size_t>(g) * clouds_ + h] = make_gap(inst, cp.a, cp.b);
    }
  }
}

Gap CloudGaps::at(int g, int h) const {
  if (g == h) throw std::invalid_argument("CloudGaps::at: identical clouds");
  if (g < h) return table_[static_cast<std::size_t>(g) * clouds_ + h];
  return flipped(table_[static_cast<std::size_t>(h) * clouds_ + g]);
}

Gap cloud_distance(const Instance& inst, const Decomposition& dec, int c1, int c2) {
  if (c1 == c2) throw std::invalid_argument("cloud_distance: a cloud has no gap to itself");
  std::tuple<double, int, int> best{INFINITY, -1, -1};
  for (int u : dec.sensors_in_cloud.at(c1)) {
    for (int v : dec.sensors_in_cloud.at(c2)) {
      best = std::min(best, std::tuple{dist(inst.sensors[u], inst.sensors[v]), u, v});
    }
  }
  return make_gap(inst, std::get<1>(best), std::get<2>(best));
}

double ForestPlan::total_length() const {
  double total = 0.0;
  for (const ForestEdge& e : edges) total += e.length;
  return total;
}

ForestPlan msfn(const Instance& inst, const Decomposition& dec, const CloudGaps& gaps) {
  (void)inst;
  const int n = dec.cloud_count();
  std::vector<std::tuple<double, int, int>> order;
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) order.emplace_back(gaps.at(g, h).length, g, h);
  }
  std::sort(order.begin(), order.end());

  ForestPlan plan;
  DisjointSets sets(n);
  for (const auto& [len, g, h] : order) {
    if (!sets.unite(g, h)) continue;
    const Gap gap = gaps.at(g, h);
    plan.edges.push_back({g, h, gap.a, gap.b, gap.length, 0});
    if (static_cast<int>(plan.edges.size()) == n - 1) break;
  }
  return plan;
}

ForestPlan msfn(const Instance& inst, const Decomposition& dec) {
  return msfn(inst, dec, CloudGaps(inst, dec));
}

int steiner_count(double length, double r) {
  return 2 + static_cast<int>(std::floor(length / r));
}

std::vector<Point> steinerize(const ForestEdge& e, double r, const Tolerance& tol) {
  if (!(r > 0.0)) throw std::invalid_argument("steinerize: r must be positive");
  const double len = dist(e.a, e.b);
  std::vector<Point> raw{e.a};
  const int steps = static_cast<int>(std::floor(len / r));
  for (int k = 1; k <= steps; ++k) raw.push_back(point_along(e.a, e.b, k * r));
  raw.push_back(e.b);
  return dedup_points(raw, tol);
}

int ClusterState::cluster_count() const {
  if (cluster_of.empty()) return 0;
  return *std::max_element(cluster_of.begin(), cluster_of.end()) + 1;
}

ClusterState merge_clusters_green(const Instance& inst, const Decomposition& dec,
                                  const CloudGaps& gaps, const MergeOptions& opts, Exec exec) {
  const Tolerance& tol = inst.tol;
  const double r = inst.r;
  const int n = dec.cloud_count();
  ClusterState st;
  st.initial_clusters = n;
  Clusters cl(n);

  // Phase 1: Kruskal over cloud pairs whose sensors come within r + 2.
  std::vector<std::tuple<double, int, int>> close;
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) {
      const double d = gaps.at(g, h).sensor_distance;
      if (tol.within(d, r + 2.0)) close.emplace_back(d, g, h);
    }
  }
  std::sort(close.begin(), close.end());
  for (const auto& [d, g, h] : close) {
    if (!cl.sets.unite(g, h)) continue;
    const Gap gap = gaps.at(g, h);
    st.green_relays.push_back(gap.a);
    st.green_relays.push_back(gap.b);
    ++st.phase1_merges;
  }

  if ((opts.phase2 || opts.phase3) && cl.sets.set_count() >= 3) {
    const double reach = r + 1.0;
    std::vector<Point> raw = candidate_points(inst.sensors, reach, tol);
    std::vector<Point> cand;
    std::vector<std::vector<int>> cand_clouds;
    {
      std::vector<Point> sorted;
      for (int i : lex_order(raw)) sorted.push_back(raw[i]);
      // Keep only points reaching at least two clouds; nothing else can help.
      std::vector<std::vector<int>> clouds_near =
          coverage_sets(sorted, inst.sensors, dec.cloud_of, reach, tol, exec);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (clouds_near[i].size() < 2) continue;
        cand.push_back(sorted[i]);
        cand_clouds.push_back(std::move(clouds_near[i]));
      }
    }
    const SpatialHash sensor_grid(inst.sensors, reach);

    // Phase 2: one hub z plus an attach relay in each of three clusters.
    if (opts.phase2) {
      for (const Point& z : cand) {
        for (;;) {
          const std::vector<Reach> near = reach_from(z, sensor_grid, dec, cl, reach, tol);
          if (near.size() < 3) break;
          st.green_relays.push_back(z);
          for (int k = 0; k < 3; ++k) {
            st.green_relays.push_back(attach_point(inst.sensors[near[k].sensor], z));
          }
          cl.sets.unite(near[0].cluster, near[1].cluster);
          cl.sets.unite(near[0].cluster, near[2].cluster);
          ++st.phase2_merges;
        }
      }
    }

    // Phase 3: hubs z1, z2 within r, each reaching two clusters, four in all.
    if (opts.phase3 && cl.sets.set_count() >= 4) {
      const SpatialHash cand_grid(cand, r);
      long long checks = 0;
      for (std::size_t i = 0; i < cand.size() && !st.phase3_capped; ++i) {
        for (int j : cand_grid.within(cand[i], r, tol)) {
          if (j <= static_cast<int>(i)) continue;
          if (++checks > opts.pair_check_cap) {
            st.phase3_capped = true;
            break;
          }
          if (!four_way_possible(cand_clouds[i], cand_clouds[j], cl)) continue;
          const auto n1 = reach_from(cand[i], sensor_grid, dec, cl, reach, tol);
          const auto n2 = reach_from(cand[j], sensor_grid, dec, cl, reach, tol);
          bool done = false;
          for (std::size_t a = 0; a < n1.size() && !done; ++a) {
            for (std::size_t b = a + 1; b < n1.size() && !done; ++b) {
              for (std::size_t c = 0; c < n2.size() && !done; ++c) {
                for (std::size_t e = c + 1; e < n2.size() && !done; ++e) {
                  const int ids[4] = {n1[a].cluster, n1[b].cluster, n2[c].cluster, n2[e].cluster};
                  if (ids[2] == ids[0] || ids[2] == ids[1] || ids[3] == ids[0] ||
                      ids[3] == ids[1]) {
                    continue;
                  }
                  st.green_relays.push_back(cand[i]);
                  st.green_relays.push_back(cand[j]);
                  st.green_relays.push_back(attach_point(inst.sensors[n1[a].sensor], cand[i]));
                  st.green_relays.push_back(attach_point(inst.sensors[n1[b].sensor], cand[i]));
                  st.green_relays.push_back(attach_point(inst.sensors[n2[c].sensor], cand[j]));
                  st.green_relays.push_back(attach_point(inst.sensors[n2[e].sensor], cand[j]));
                  for (int k = 1; k < 4; ++k) cl.sets.unite(ids[0], ids[k]);
                  ++st.phase3_merges;
                  done = true;
                }
              }
            }
          }
        }
      }
    }
  }

  st.cluster_of.resize(n);
  for (int c = 0; c < n; ++c) st.cluster_of[c] = cl.of(c);
  normalize(st.cluster_of);
  return st;
}

ForestPlan msfn_prime(const Instance& inst, const Decomposition& dec, const CloudGaps& gaps,
                      const ClusterState& clusters) {
  const int k = clusters.cluster_count();
  const int n = dec.cloud_count();
  // Shortest cloud gap between each cluster pair, ties by cloud ids.
  struct Link {
    double length = INFINITY;
    int g = -1;
    int h = -1;
  };
  std::vector<Link> link(static_cast<std::size_t>(k) * k);
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) {
      int cg = clusters.cluster_of[g];
      int ch = clusters.cluster_of[h];
      if (cg == ch) continue;
      int x = g;
      int y = h;
      if (cg > ch) {
        std::swap(cg, ch);
        std::swap(x, y);
      }
      Link& slot = link[static_cast<std::size_t>(cg) * k + ch];
      const double len = gaps.at(x, y).length;
      if (std::tie(len, x, y) < std::tie(slot.length, slot.g, slot.h)) slot = {len, x, y};
    }
  }

  std::vector<std::tuple<int, double, int, int>> order;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const Link& l = link[static_cast<std::size_t>(a) * k + b];
      if (l.g >= 0) order.emplace_back(steiner_count(l.length, inst.r), l.length, a, b);
    }
  }
  std::sort(order.begin(), order.end());

  ForestPlan plan;
  DisjointSets sets(k);
  for (const auto& [w, len, a, b] : order) {
    if (!sets.unite(a, b)) continue;
    const Link& l = link[static_cast<std::size_t>(a) * k + b];
    const Gap gap = gaps.at(l.g, l.h);
    plan.edges.push_back({a, b, gap.a, gap.b, gap.length, w});
    if (static_cast<int>(plan.edges.size()) == k - 1) break;
  }
  return plan;
}

}  // namespace relay
