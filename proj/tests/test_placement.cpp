#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "relay/placement.hpp"
#include "relay/verify.hpp"

using namespace relay;

namespace {

Instance make(std::vector<Point> s, double r = 2.0) {
  Instance inst;
  inst.sensors = std::move(s);
  inst.r = r;
  return inst;
}

Instance chain3() { return make({{0, 0}, {1.5, 0}, {3, 0}}); }

Instance pinwheel() {
  std::vector<Point> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = k * 72.0 * std::numbers::pi / 180.0;
    pts.push_back({0.95 * std::cos(a), 0.95 * std::sin(a)});
  }
  return make(pts);
}

bool stabs_cover(const Instance& inst, const Decomposition& dec, const std::vector<int>& blobs,
                 const std::vector<Point>& stabs) {
  for (int b : blobs) {
    bool hit = false;
    for (const Point& p : stabs) {
      for (int s : dec.sensors_in_blob[b]) hit = hit || dist(p, inst.sensors[s]) <= 1 + 1e-9;
    }
    if (!hit) return false;
  }
  return true;
}

// Cloud's sensors as their own instance, so the one-tier checker can judge
// intra-cloud connectivity.
bool cloud_connected(const Instance& inst, const Decomposition& dec, int c,
                     const std::vector<Point>& relays) {
  Instance sub;
  sub.r = 1.0;  // relays of the cloud are only allowed unit links here
  for (int s : dec.sensors_in_cloud[c]) sub.sensors.push_back(inst.sensors[s]);
  return check_points(sub, relays, Tier::one).feasible;
}

std::vector<Instance> random_instances(int count, unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<Instance> out;
  for (int t = 0; t < count; ++t) {
    std::uniform_real_distribution<double> coord(0, 5 + t % 6);
    std::vector<Point> pts;
    const int n = 4 + t % 30;
    for (int i = 0; i < n; ++i) pts.push_back({coord(gen), coord(gen)});
    out.push_back(make(pts));
  }
  return out;
}

}  // namespace

TEST_CASE("greedy_stabs: examples") {
  const Instance one = make({{0, 0}, {0.5, 0}});
  CHECK(greedy_stabs(one, build_decomposition(one)).size() == 1);

  const Instance c = chain3();
  const StabSet s = greedy_stabs(c, build_decomposition(c));
  REQUIRE(s.size() == 2);
  CHECK(s.gains == std::vector<int>{2, 1});

  const Instance p = pinwheel();
  const Decomposition pd = build_decomposition(p);
  REQUIRE(pd.blob_count() == 5);
  const StabSet ps = greedy_stabs(p, pd);
  REQUIRE(ps.size() == 1);
  CHECK(ps.covered[0].size() == 5);
}

TEST_CASE("greedy_stabs: coverage and per-step dominance") {
  for (const Instance& inst : random_instances(25, 21)) {
    const Decomposition dec = build_decomposition(inst);
    const StabSet s = greedy_stabs(inst, dec);
    std::vector<int> all(dec.blob_count());
    for (int b = 0; b < dec.blob_count(); ++b) all[b] = b;
    CHECK(stabs_cover(inst, dec, all, s.points));

    std::vector<int> ids(inst.sensors.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    const BlobCandidates cand = blob_candidates(inst, dec, ids);
    std::vector<char> stabbed(dec.blob_count(), 0);
    for (std::size_t step = 0; step < s.size(); ++step) {
      for (const auto& bs : cand.blobs) {
        int gain = 0;
        for (int b : bs) gain += !stabbed[b];
        CHECK(gain <= s.gains[step]);
      }
      for (int b : s.covered[step]) stabbed[b] = 1;
    }
  }
}

TEST_CASE("exact_stabs: examples") {
  const Instance one = make({{0, 0}, {0.5, 0}});
  const auto e1 = exact_stabs(one, build_decomposition(one), 0, 2);
  REQUIRE(e1.has_value());
  CHECK(e1->size() == 1);

  const Instance c = chain3();
  const Decomposition cd = build_decomposition(c);
  const auto e3 = exact_stabs(c, cd, 0, 3);
  REQUIRE(e3.has_value());
  CHECK(e3->size() == 2);
  CHECK_FALSE(exact_stabs(c, cd, 0, 2).has_value());
  CHECK_FALSE(exact_stabs(c, cd, 0, 1).has_value());
  CHECK_THROWS_AS(exact_stabs(c, cd, 0, 0), std::invalid_argument);
}

TEST_CASE("exact_stabs: optimal against subset enumeration") {
  int compared = 0;
  for (const Instance& inst : random_instances(200, 5)) {
    const Decomposition dec = build_decomposition(inst);
    for (int c = 0; c < dec.cloud_count(); ++c) {
      const BlobCandidates cand = blob_candidates(inst, dec, dec.sensors_in_cloud[c]);
      if (cand.points.size() > 12) continue;
      const auto& blobs = dec.blobs_in_cloud[c];
      std::vector<std::vector<int>> sets;
      for (const auto& bs : cand.blobs) {
        std::vector<int> local;
        for (int b : bs) local.push_back(static_cast<int>(std::find(blobs.begin(), blobs.end(), b) - blobs.begin()));
        sets.push_back(local);
      }
      const int best = oracle::min_cover_bruteforce(sets, static_cast<int>(blobs.size()));
      const auto ex = exact_stabs(inst, dec, c, static_cast<int>(blobs.size()) + 1);
      REQUIRE(ex.has_value());
      CHECK(static_cast<int>(ex->size()) == best);
      CHECK(stabs_cover(inst, dec, blobs, ex->points));
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("stabs_to_hubs: examples") {
  const Instance one = make({{0, 0}, {0.5, 0}});
  const Decomposition od = build_decomposition(one);
  StabSet s1;
  s1.points = {{0.2, 0}};
  s1.covered = {{0}};
  CHECK(stabs_to_hubs(one, od, 0, s1).points.size() == 1);

  const Instance c = chain3();
  const Decomposition cd = build_decomposition(c);
  StabSet s2;
  s2.points = {{0.75, 0}, {3, 0}};
  s2.covered = {{0, 1}, {2}};
  const HubSet h = stabs_to_hubs(c, cd, 0, s2);
  REQUIRE(h.points.size() == 3);
  CHECK(h.points[2].x == doctest::Approx(2.25));
  CHECK(h.points[2].y == doctest::Approx(0.0));
  CHECK(cloud_connected(c, cd, 0, h.points));

  const Instance tangent = make({{0, 0}, {2, 0}});
  const Decomposition td = build_decomposition(tangent);
  REQUIRE(td.blob_count() == 2);
  StabSet s3;
  s3.points = {{1, 0}};
  s3.covered = {{0, 1}};
  const HubSet th = stabs_to_hubs(tangent, td, 0, s3);
  CHECK(th.points.size() == 1);
  CHECK(th.merges == 0);

  StabSet missing;
  missing.points = {{0.75, 0}};
  missing.covered = {{0, 1}};
  CHECK_THROWS_AS(stabs_to_hubs(c, cd, 0, missing), std::invalid_argument);
}

TEST_CASE("stabs_to_hubs: hub bound and connectivity on random clouds") {
  for (const Instance& inst : random_instances(40, 9)) {
    const Decomposition dec = build_decomposition(inst);
    const StabSet all = greedy_stabs(inst, dec);
    for (int c = 0; c < dec.cloud_count(); ++c) {
      const StabSet local = stabs_in_cloud(all, dec, c);
      const HubSet h = stabs_to_hubs(inst, dec, c, local);
      CHECK(h.points.size() <= 2 * local.size() - 1);
      CHECK(cloud_connected(inst, dec, c, h.points));
    }
  }
}

TEST_CASE("stitch_cloud: examples") {
  const Instance one = make({{0, 0}, {0.5, 0}});
  CHECK(stitch_cloud(one, build_decomposition(one), 0).empty());

  const Instance c = chain3();
  const Decomposition cd = build_decomposition(c);
  const auto red = stitch_cloud(c, cd, 0);
  CHECK(red.size() == 2);
  CHECK(cloud_connected(c, cd, 0, red));

  const Instance tangent = make({{0, 0}, {2, 0}});
  const auto t = stitch_cloud(tangent, build_decomposition(tangent), 0);
  REQUIRE(t.size() == 1);
  CHECK(t[0].x == doctest::Approx(1.0));
  CHECK(t[0].y == doctest::Approx(0.0));
}

TEST_CASE("stitch_cloud: bound and connectivity on random clouds") {
  for (const Instance& inst : random_instances(40, 13)) {
    const Decomposition dec = build_decomposition(inst);
    for (int c = 0; c < dec.cloud_count(); ++c) {
      const auto red = stitch_cloud(inst, dec, c);
      CHECK(red.size() + 1 <= dec.blobs_in_cloud[c].size());
      CHECK(cloud_connected(inst, dec, c, red));
    }
  }
}
