#include "relay/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "relay/spatial_hash.hpp"
#include "relay/verify.hpp"

namespace relay {

namespace {

// Sensors every `step` units along a -> b, both ends included.
void sample_segment(Point a, Point b, double step, std::vector<Point>& out) {
  const double len = dist(a, b);
  const int pieces = std::max(1, static_cast<int>(std::ceil(len / step - 1e-12)));
  for (int k = (out.empty() || !(out.back() == a)) ? 0 : 1; k <= pieces; ++k) {
    out.push_back(point_along(a, b, len * k / pieces));
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("generator self-check failed: " + what);
}

}  // namespace

Instance gen_uniform(int n, double width, double r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_uniform: n must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("gen_uniform: width must be positive");
  Rng rng(seed);
  Instance inst;
  inst.r = r;
  inst.sensors.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, width);
    const double y = rng.uniform(0.0, width);
    inst.sensors.push_back({x, y});
  }
  return inst;
}

Instance gen_clustered(int n, int groups, double width, double spread, double r,
                       std::uint64_t seed) {
  if (n < 1 || groups < 1) throw std::invalid_argument("gen_clustered: n and groups must be >= 1");
  if (!(width > 0.0) || !(spread >= 0.0)) {
    throw std::invalid_argument("gen_clustered: width must be positive, spread nonnegative");
  }
  Rng rng(seed);
  std::vector<Point> centers;
  for (int g = 0; g < groups; ++g) {
    const double x = rng.uniform(0.0, width);
    const double y = rng.uniform(0.0, width);
    centers.push_back({x, y});
  }
  Instance inst;
  inst.r = r;
  for (int i = 0; i < n; ++i) {
    const Point c = centers[i % groups];
    const double rho = spread * std::sqrt(rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    inst.sensors.push_back({c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)});
  }
  return inst;
}

Figure8 gen_figure8(int b, double r) {
  if (b < 2) throw std::invalid_argument("gen_figure8: b must be >= 2");
  if (!(r > 2.0)) throw std::invalid_argument("gen_figure8: r must exceed 2");
  // Gap D > 2 keeps every blob in its own cloud; D <= r lets the per-blob
  // relays reach each other.
  const double D = 1.0 + r / 2.0;
  Figure8 out;
  out.instance.r = r;
  for (int i = 0; i < b; ++i) {
    out.instance.sensors.push_back({i * D, 0.25});
    out.instance.sensors.push_back({i * D, -0.25});
    out.certificate.points.push_back({{i * D, 0.0}, Color::plain});
  }
  expect(build_decomposition(out.instance).blob_count() == b, "figure-8 blob count");
  expect(check_one_tier(out.instance, out.certificate), "figure-8 certificate feasibility");
  return out;
}

Hardness gen_hardness(const std::vector<std::vector<int>>& adjacency,
                      const std::vector<int>& vertex_cover) {
  const int nv = static_cast<int>(adjacency.size());
  if (nv < 1) throw std::invalid_argument("gen_hardness: graph has no vertices");

  Hardness out;
  for (int u = 0; u < nv; ++u) {
    if (adjacency[u].size() > 5) {
      throw std::invalid_argument("gen_hardness: vertex " + std::to_string(u) +
                                  " has degree above 5");
    }
    std::vector<int> nb = adjacency[u];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw std::invalid_argument("gen_hardness: repeated neighbor of vertex " + std::to_string(u));
    }
    for (int v : nb) {
      if (v < 0 || v >= nv || v == u) {
        throw std::invalid_argument("gen_hardness: bad neighbor " + std::to_string(v));
      }
      const auto& back = adjacency[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) {
        throw std::invalid_argument("gen_hardness: adjacency is not symmetric");
      }
      if (u < v) out.edges.emplace_back(u, v);
    }
  }
  std::vector<char> in_cover(nv, 0);
  for (int v : vertex_cover) {
    if (v < 0 || v >= nv) throw std::invalid_argument("gen_hardness: cover vertex out of range");
    in_cover[v] = 1;
  }
  for (const auto& [u, v] : out.edges) {
    if (!in_cover[u] && !in_cover[v]) {
      throw std::invalid_argument("gen_hardness: edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") is not covered");
    }
  }

  const double r = 16.0 * (nv + 1);
  const double pitch = 15.0;
  const double L = (nv + 2) * r;
  const double y_mid = pitch * (nv - 1) / 2.0;
  const double R0 = y_mid + 8.0;
  const double deg = std::numbers::pi / 180.0;
  // Tentacle ends around a good location, each with its own lane offset.
  const double angles[5] = {0.0, 72.0, -72.0, 144.0, -144.0};
  const double lanes[5] = {0.0, 3.0, -3.0, 6.0, -6.0};

  Instance& inst = out.instance;
  inst.r = r;
  auto good = [&](int v) { return Point{0.0, pitch * v}; };

  const Point p0{-R0 / 2.0, y_mid};
  inst.sensors.push_back(p0);
  std::vector<int> tentacle_of{-1};  // per sensor; -1 for isolated sensors

  struct Region {
    Point center;
    double radius;
  };
  std::vector<Region> regions{{{0.0, y_mid}, R0}};
  std::vector<int> next_slot(nv, 0);
  std::vector<Point> relays{p0};
  for (int v = 0; v < nv; ++v) {
    if (in_cover[v]) relays.push_back(good(v));
  }

  int tentacle = 0;
  for (std::size_t j = 0; j < out.edges.size(); ++j) {
    const double X = (static_cast<double>(j) + 1.0) * L;
    double lane_y[2];
    const int ends[2] = {out.edges[j].first, out.edges[j].second};
    for (int side = 0; side < 2; ++side) {
      const int v = ends[side];
      const int slot = next_slot[v]++;
      const Point g = good(v);
      const Point e{g.x + std::cos(angles[slot] * deg), g.y + std::sin(angles[slot] * deg)};
      const double y = g.y + lanes[slot];
      std::vector<Point> path;
      sample_segment(e, {e.x, y}, 1.0, path);
      sample_segment({e.x, y}, {X - 1.0, y}, 1.0, path);
      for (const Point& p : path) {
        inst.sensors.push_back(p);
        tentacle_of.push_back(tentacle);
      }
      ++tentacle;
      inst.sensors.push_back({X + 1.0, y});
      tentacle_of.push_back(-1);
      relays.push_back({X, y});
      lane_y[side] = y;
    }
    regions.push_back({{X, (lane_y[0] + lane_y[1]) / 2.0}, std::abs(lane_y[0] - lane_y[1]) / 2.0 + 2.0});
  }

  out.expected_blobs = 4 * static_cast<int>(out.edges.size()) + 1;
  out.certificate.relay_points = relays;
  out.certificate.expected_count =
      static_cast<int>(vertex_cover.size()) + 2 * static_cast<int>(out.edges.size()) + 1;

  expect(build_decomposition(inst).blob_count() == out.expected_blobs, "hardness blob count");
  for (std::size_t a = 0; a < regions.size(); ++a) {
    for (std::size_t b = a + 1; b < regions.size(); ++b) {
      const double gap = dist(regions[a].center, regions[b].center) - regions[a].radius -
                         regions[b].radius;
      expect(gap > nv * r, "hardness region separation");
    }
  }
  // Away from vertex gadgets, sensors of different tentacles stay 3 apart.
  const SpatialHash grid(inst.sensors, 3.0);
  for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
    if (tentacle_of[i] < 0) continue;
    const Point p = inst.sensors[i];
    bool in_gadget = false;
    for (int v = 0; v < nv && !in_gadget; ++v) in_gadget = dist(p, good(v)) <= 7.5;
    if (in_gadget) continue;
    grid.for_each_within(p, 3.0 - 1e-6, Tolerance{1e-12}, [&](int j) {
      expect(tentacle_of[j] < 0 || tentacle_of[j] == tentacle_of[i], "hardness tentacle separation");
    });
  }
  expect(static_cast<int>(relays.size()) == out.certificate.expected_count,
         "hardness certificate size");
  expect(check_points(inst, relays, Tier::one).feasible, "hardness certificate feasibility");
  return out;
}

}  // namespace relay
