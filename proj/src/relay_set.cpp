#include "relay/relay_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "relay/errors.hpp"

namespace relay {

std::string_view color_name(Color c) {
  switch (c) {
    case Color::plain: return "plain";
    case Color::red: return "red";
    case Color::green: return "green";
    case Color::yellow: return "yellow";
  }
  return "plain";
}

Color parse_color(std::string_view name) {
  if (name == "plain") return Color::plain;
  if (name == "red") return Color::red;
  if (name == "green") return Color::green;
  if (name == "yellow") return Color::yellow;
  throw std::invalid_argument("unknown relay color '" + std::string(name) + "'");
}

std::uint64_t Chain::nominal_count() const {
  const double len = length();
  if (len == 0.0) return 1;
  return 2 + static_cast<std::uint64_t>(std::floor(len / spacing));
}

std::uint64_t RelaySet::nominal_count() const {
  std::uint64_t n = points.size();
  for (const Chain& c : chains) n += c.nominal_count();
  return n;
}

std::vector<Point> chain_points(const Chain& c) {
  if (!(c.spacing > 0.0)) throw std::invalid_argument("chain spacing must be positive");
  const double len = c.length();
  std::vector<Point> out{c.a};
  if (len == 0.0) return out;
  const auto steps = static_cast<std::uint64_t>(std::floor(len / c.spacing));
  out.reserve(steps + 2);
  for (std::uint64_t k = 1; k <= steps; ++k) {
    out.push_back(point_along(c.a, c.b, static_cast<double>(k) * c.spacing));
  }
  out.push_back(c.b);
  return out;
}

std::vector<ColoredPoint> expand_colored(const RelaySet& rs, std::uint64_t limit,
                                         const Tolerance& tol) {
  const std::uint64_t nominal = rs.nominal_count();
  if (nominal > limit) {
    throw LimitError("relay expansion would produce " + std::to_string(nominal) +
                         " relays, limit is " + std::to_string(limit),
                     nominal);
  }
  std::vector<ColoredPoint> raw;
  raw.reserve(nominal);
  for (const ColoredPoint& cp : rs.points) raw.push_back(cp);
  for (const Chain& c : rs.chains) {
    for (const Point& p : chain_points(c)) raw.push_back({p, c.color});
  }
  std::vector<Point> pts;
  pts.reserve(raw.size());
  for (const ColoredPoint& cp : raw) pts.push_back(cp.p);
  const std::vector<Point> kept = dedup_points(pts, tol);

  // dedup_points keeps first occurrences in order, so walk both lists.
  std::vector<ColoredPoint> out;
  out.reserve(kept.size());
  std::size_t k = 0;
  for (const ColoredPoint& cp : raw) {
    if (k < kept.size() && cp.p == kept[k]) {
      out.push_back(cp);
      ++k;
    }
  }
  return out;
}

std::vector<Point> expand_relays(const RelaySet& rs, std::uint64_t limit, const Tolerance& tol) {
  std::vector<Point> out;
  for (const ColoredPoint& cp : expand_colored(rs, limit, tol)) out.push_back(cp.p);
  return out;
}

}  // namespace relay
