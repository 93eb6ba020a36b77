#include "relay/placement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "relay/cover_search.hpp"
#include "relay/spatial_hash.hpp"

namespace relay {

namespace {

std::vector<Point> gather(const Instance& inst, const std::vector<int>& ids) {
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (int i : ids) pts.push_back(inst.sensors[i]);
  return pts;
}

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
  return ids;
}

}  // namespace

BlobCandidates blob_candidates(const Instance& inst, const Decomposition& dec,
                               const std::vector<int>& sensor_ids, Exec exec) {
  const std::vector<Point> sites = gather(inst, sensor_ids);
  std::vector<Point> raw = candidate_points(sites, 1.0, inst.tol);
  BlobCandidates out;
  for (int i : lex_order(raw)) out.points.push_back(raw[i]);

  std::vector<int> labels;
  labels.reserve(sensor_ids.size());
  for (int s : sensor_ids) labels.push_back(dec.blob_of[s]);
  out.blobs = coverage_sets(out.points, sites, labels, 1.0, inst.tol, exec);
  return out;
}

StabSet greedy_stabs(const Instance& inst, const Decomposition& dec, Exec exec) {
  const BlobCandidates cand = blob_candidates(inst, dec, all_indices(inst.sensors.size()), exec);
  std::vector<char> stabbed(dec.blob_count(), 0);
  int remaining = dec.blob_count();
  StabSet out;

  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < cand.points.size(); ++i) {
      int gain = 0;
      for (int b : cand.blobs[i]) gain += !stabbed[b];
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    // Every sensor is itself a candidate, so an unstabbed blob always has one.
    if (best < 0) throw std::logic_error("greedy_stabs: no candidate reaches an unstabbed blob");
    for (int b : cand.blobs[best]) {
      if (!stabbed[b]) {
        stabbed[b] = 1;
        --remaining;
      }
    }
    out.points.push_back(cand.points[best]);
    out.covered.push_back(cand.blobs[best]);
    out.gains.push_back(best_gain);
  }
  return out;
}

StabSet stabs_in_cloud(const StabSet& stabs, const Decomposition& dec, int cloud) {
  StabSet out;
  for (std::size_t i = 0; i < stabs.points.size(); ++i) {
    if (stabs.covered[i].empty() || dec.cloud_of_blob[stabs.covered[i].front()] != cloud) continue;
    out.points.push_back(stabs.points[i]);
    out.covered.push_back(stabs.covered[i]);
    if (i < stabs.gains.size()) out.gains.push_back(stabs.gains[i]);
  }
  return out;
}

std::optional<StabSet> exact_stabs(const Instance& inst, const Decomposition& dec, int cloud,
                                   int k, double budget, Exec exec) {
  if (k < 1) throw std::invalid_argument("exact_stabs: k must be >= 1");
  if (k == 1) return std::nullopt;
  const std::vector<int>& blobs = dec.blobs_in_cloud.at(cloud);
  const BlobCandidates cand = blob_candidates(inst, dec, dec.sensors_in_cloud[cloud], exec);

  std::vector<std::vector<int>> sets;
  sets.reserve(cand.blobs.size());
  for (const auto& bs : cand.blobs) {
    std::vector<int> local;
    for (int b : bs) {
      local.push_back(static_cast<int>(std::lower_bound(blobs.begin(), blobs.end(), b) -
                                       blobs.begin()));
    }
    sets.push_back(std::move(local));
  }
  const CoverSearch found =
      min_set_cover(sets, static_cast<int>(blobs.size()), k - 1, budget);
  if (!found.chosen) return std::nullopt;

  StabSet out;
  for (int i : *found.chosen) {
    out.points.push_back(cand.points[i]);
    out.covered.push_back(cand.blobs[i]);
  }
  return out;
}

HubSet stabs_to_hubs(const Instance& inst, const Decomposition& dec, int cloud,
                     const StabSet& stabs) {
  const Tolerance& tol = inst.tol;
  const std::vector<int>& ids = dec.sensors_in_cloud.at(cloud);
  const std::vector<Point> sensors = gather(inst, ids);

  for (int b : dec.blobs_in_cloud[cloud]) {
    bool hit = false;
    for (const Point& p : stabs.points) {
      for (int s : dec.sensors_in_blob[b]) {
        if (tol.within(dist(p, inst.sensors[s]), 1.0)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) {
      throw std::invalid_argument("stabs_to_hubs: blob " + std::to_string(b) + " of cloud " +
                                  std::to_string(cloud) + " has no stab");
    }
  }

  HubSet out;
  out.points = stabs.points;

  // Nodes: cloud sensors, then hubs.
  std::vector<Point> nodes = sensors;
  nodes.insert(nodes.end(), out.points.begin(), out.points.end());
  DisjointSets sets(nodes.size() + stabs.points.size());
  auto link_all = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (tol.within(dist(nodes[i], nodes[j]), 1.0)) {
          sets.unite(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  };
  link_all(nodes.size());

  auto sensor_components = [&] {
    std::vector<int> roots;
    for (std::size_t i = 0; i < sensors.size(); ++i) roots.push_back(sets.find(static_cast<int>(i)));
    std::sort(roots.begin(), roots.end());
    return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
  };

  while (sensor_components() > 1) {
    bool placed = false;
    for (std::size_t i = 0; i < sensors.size() && !placed; ++i) {
      for (std::size_t j = i + 1; j < sensors.size(); ++j) {
        if (sets.find(static_cast<int>(i)) == sets.find(static_cast<int>(j))) continue;
        if (!tol.within(dist(sensors[i], sensors[j]), 2.0)) continue;
        const Point mid = 0.5 * (sensors[i] + sensors[j]);
        out.points.push_back(mid);
        nodes.push_back(mid);
        const std::size_t h = nodes.size() - 1;
        for (std::size_t v = 0; v < h; ++v) {
          if (tol.within(dist(nodes[v], mid), 1.0)) {
            sets.unite(static_cast<int>(v), static_cast<int>(h));
          }
        }
        ++out.merges;
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("stabs_to_hubs: cloud is not connected at distance 2");
  }
  return out;
}

std::vector<Point> stitch_cloud(const Instance& inst, const Decomposition& dec, int cloud,
                                Exec exec) {
  const std::vector<int>& blobs = dec.blobs_in_cloud.at(cloud);
  std::vector<Point> out;
  if (blobs.size() <= 1) return out;
  const BlobCandidates cand = blob_candidates(inst, dec, dec.sensors_in_cloud[cloud], exec);

  std::vector<char> in_tree(dec.blob_count(), 0);
  in_tree[blobs.front()] = 1;
  std::size_t tree_size = 1;

  while (tree_size < blobs.size()) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < cand.points.size(); ++i) {
      bool touches = false;
      int gain = 0;
      for (int b : cand.blobs[i]) {
        if (in_tree[b]) {
          touches = true;
        } else {
          ++gain;
        }
      }
      if (touches && gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) throw std::logic_error("stitch_cloud: no candidate extends the stitched set");
    for (int b : cand.blobs[best]) {
      if (!in_tree[b]) {
        in_tree[b] = 1;
        ++tree_size;
      }
    }
    out.push_back(cand.points[best]);
  }
  return out;
}

}  // namespace relay
