#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "relay/geometry.hpp"
#include "relay/spatial_hash.hpp"

using namespace relay;

TEST_CASE("dist") {
  CHECK(dist({0, 0}, {0, 0}) == 0.0);
  CHECK(dist({0, 0}, {3, 4}) == 5.0);
  CHECK(std::abs(dist({0, 0}, {1, 1}) - std::sqrt(2.0)) <= 1e-12);
  CHECK(dist({1, 2}, {-3, 5}) == dist({-3, 5}, {1, 2}));
}

TEST_CASE("circle_intersections: tangency, crossing, disjoint") {
  auto t = circle_intersections({0, 0}, 1, {2, 0}, 1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].x == doctest::Approx(1.0));
  CHECK(t[0].y == doctest::Approx(0.0));

  auto c = circle_intersections({0, 0}, 1, {1, 0}, 1);
  REQUIRE(c.size() == 2);
  const double h = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(c[0].x - 0.5) <= 1e-12);
  CHECK(std::abs(c[0].y - h) <= 1e-12);
  CHECK(std::abs(c[1].x - 0.5) <= 1e-12);
  CHECK(std::abs(c[1].y + h) <= 1e-12);

  CHECK(circle_intersections({0, 0}, 1, {3, 0}, 1).empty());
}

TEST_CASE("circle_intersections: internal tangency and errors") {
  auto t = circle_intersections({0, 0}, 2, {1, 0}, 1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].x == doctest::Approx(2.0));
  auto u = circle_intersections({1, 0}, 1, {0, 0}, 2);
  REQUIRE(u.size() == 1);
  CHECK(u[0].x == doctest::Approx(2.0));
  CHECK(circle_intersections({0, 0}, 3, {0.5, 0}, 1).empty());

  CHECK_THROWS_AS(circle_intersections({0, 0}, 1, {0, 0}, 1), std::domain_error);
  CHECK_THROWS_AS(circle_intersections({0, 0}, 1, {1e-10, 0}, 1), std::domain_error);
  CHECK_THROWS_AS(circle_intersections({0, 0}, 0, {1, 0}, 1), std::domain_error);
}

TEST_CASE("circle_intersections: random pairs land on both circles") {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> coord(-5, 5), rad(0.2, 3);
  int tested = 0;
  for (int it = 0; it < 20000 && tested < 2000; ++it) {
    const Point c1{coord(gen), coord(gen)}, c2{coord(gen), coord(gen)};
    const double r1 = rad(gen), r2 = rad(gen);
    const double d = dist(c1, c2);
    if (!(d < r1 + r2 - 1e-9 && d > std::abs(r1 - r2) + 1e-9)) continue;
    const auto pts = circle_intersections(c1, r1, c2, r2);
    REQUIRE(pts.size() == 2);
    for (const Point& p : pts) {
      CHECK(std::abs(dist(p, c1) - r1) <= 1e-8);
      CHECK(std::abs(dist(p, c2) - r2) <= 1e-8);
    }
    ++tested;
  }
  CHECK(tested == 2000);
}

TEST_CASE("candidate_points: small cases") {
  const std::vector<Point> one{{0, 0}};
  auto a = candidate_points(one, 1.0);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == Point{0, 0});

  const std::vector<Point> two{{0, 0}, {2, 0}};
  auto b = candidate_points(two, 1.0);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Point{0, 0});
  CHECK(b[1] == Point{2, 0});
  CHECK(b[2].x == doctest::Approx(1.0));

  const std::vector<Point> close{{0, 0}, {1, 0}};
  CHECK(candidate_points(close, 1.0).size() == 4);
}

TEST_CASE("candidate_points: duplicates and near-coincident intersections merge") {
  const std::vector<Point> dup{{0, 0}, {0, 0}, {1, 0}};
  CHECK(candidate_points(dup, 1.0).size() == 4);
  // Three circles through a common point.
  const double h = std::sqrt(3.0) / 2.0;
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0.5, h}};
  // Intersections: each pair meets at one shared vertex pattern; count stays
  // below the naive 3 + 6.
  const auto pts = candidate_points(tri, 1.0);
  CHECK(pts.size() <= 9);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(dist(pts[i], pts[j]) > 1e-9);
  }
}

TEST_CASE("candidate_points: size bound and depth matches dense sampling") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_real_distribution<double> coord(0, 4);
    std::vector<Point> centers;
    const int n = 3 + trial % 6;
    for (int i = 0; i < n; ++i) centers.push_back({coord(gen), coord(gen)});
    const auto cand = candidate_points(centers, 1.0);
    CHECK(cand.size() <= centers.size() + centers.size() * (centers.size() - 1));
    int cand_depth = 0;
    for (const Point& p : cand) cand_depth = std::max(cand_depth, coverage_depth(p, centers, 1.0));
    const int sampled = oracle::sampled_max_depth(centers, 1.0, {-1, -1}, {5, 5}, 100000, 100 + trial);
    CHECK(cand_depth == sampled);
  }
}

TEST_CASE("coverage_depth") {
  const std::vector<Point> one{{0, 0}};
  CHECK(coverage_depth({0, 0}, one, 1.0) == 1);
  const std::vector<Point> row{{0, 0}, {1.5, 0}, {3, 0}};
  CHECK(coverage_depth({0.75, 0}, row, 1.0) == 2);
  std::vector<Point> pinwheel;
  for (int k = 0; k < 5; ++k) {
    const double a = k * 72.0 * std::numbers::pi / 180.0;
    pinwheel.push_back({0.95 * std::cos(a), 0.95 * std::sin(a)});
  }
  CHECK(coverage_depth({0, 0}, pinwheel, 1.0) == 5);
  CHECK(dist(pinwheel[0], pinwheel[1]) == doctest::Approx(2 * 0.95 * std::sin(std::numbers::pi / 5)));
  CHECK(dist(pinwheel[0], pinwheel[1]) > 1.0);
  // Closed disk with slack: a point exactly on the boundary counts.
  CHECK(coverage_depth({1, 0}, one, 1.0) == 1);
  CHECK(coverage_depth({1 + 1e-10, 0}, one, 1.0) == 1);
  CHECK(coverage_depth({1 + 1e-6, 0}, one, 1.0) == 0);
}

TEST_CASE("dedup_points and lex_order") {
  const std::vector<Point> pts{{1, 0}, {0, 5}, {1, 1e-12}, {0, 2}, {0, 5}};
  const auto kept = dedup_points(pts);
  REQUIRE(kept.size() == 3);
  CHECK(kept[0] == Point{1, 0});
  CHECK(kept[1] == Point{0, 5});
  CHECK(kept[2] == Point{0, 2});
  const auto order = lex_order(pts);
  CHECK(order == std::vector<int>{3, 1, 4, 0, 2});
}

TEST_CASE("spatial hash agrees with a linear scan") {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> coord(-10, 10);
  std::vector<Point> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({coord(gen), coord(gen)});
  const SpatialHash grid(pts, 1.3);
  for (int q = 0; q < 100; ++q) {
    const Point p{coord(gen), coord(gen)};
    std::vector<int> expect;
    for (int i = 0; i < 500; ++i) {
      if (dist(pts[i], p) <= 2.0 + 1e-9) expect.push_back(i);
    }
    CHECK(grid.within(p, 2.0) == expect);
  }
}

TEST_CASE("threshold components match BFS") {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> coord(0, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 50; ++i) pts.push_back({coord(gen), coord(gen)});
    CHECK(threshold_components(pts, 1.0) == oracle::components(pts, 1.0));
    CHECK(threshold_components(pts, 2.0) == oracle::components(pts, 2.0));
  }
}
