#pragma once

#include <string>

#include "relay/decomposition.hpp"
#include "relay/relay_set.hpp"

namespace relay {

struct RenderOptions {
  double scale = 50.0;  // pixels per unit
  bool disks = true;
  bool hulls = true;
};

/// SVG of the instance, optionally with a solution. Sensors are circles with
/// class "sensor", relays circles with class "relay relay-<color>", chains
/// lines with class "chain". Output depends only on the inputs.
std::string render_svg(const Instance& inst, const RelaySet* relays,
                       const RenderOptions& opts = {});

}  // namespace relay
