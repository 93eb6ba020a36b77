#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relay/geometry.hpp"

namespace relay {

enum class Color { plain, red, green, yellow };

std::string_view color_name(Color c);
/// Throws std::invalid_argument for an unknown name.
Color parse_color(std::string_view name);

struct ColoredPoint {
  Point p;
  Color color = Color::plain;

  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

/// Relays at a, at every `spacing` units from a toward b, and at b.
struct Chain {
  Point a;
  Point b;
  double spacing = 1.0;
  Color color = Color::plain;  // color of every relay on the chain

  double length() const { return dist(a, b); }
  /// 2 + floor(length / spacing), or 1 when a == b.
  std::uint64_t nominal_count() const;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Succinct solution: explicit points plus relay chains.
struct RelaySet {
  std::vector<ColoredPoint> points;
  std::vector<Chain> chains;

  /// Relay count before removing coincident relays.
  std::uint64_t nominal_count() const;
  bool empty() const { return points.empty() && chains.empty(); }

  friend bool operator==(const RelaySet&, const RelaySet&) = default;
};

inline constexpr std::uint64_t kDefaultExpandLimit = 10'000'000;

/// Relay positions along one chain, without dedup.
std::vector<Point> chain_points(const Chain& c);

/// Every relay as an explicit point: points first, then chains in order, with
/// relays within eps of an earlier one dropped. Throws LimitError when the
/// nominal count exceeds limit.
std::vector<Point> expand_relays(const RelaySet& rs, std::uint64_t limit = kDefaultExpandLimit,
                                 const Tolerance& tol = {});

/// Same as expand_relays but keeps the color of the first relay at each spot.
std::vector<ColoredPoint> expand_colored(const RelaySet& rs,
                                         std::uint64_t limit = kDefaultExpandLimit,
                                         const Tolerance& tol = {});

}  // namespace relay
