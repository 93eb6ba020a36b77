#pragma once

#include <vector>

#include "relay/geometry.hpp"

namespace relay {

/// Problem input: sensor locations (unit = sensor range) and relay range r.
struct Instance {
  std::vector<Point> sensors;
  double r = 1.0;
  Tolerance tol{};  // runtime knob, not part of the file format

  /// Throws std::invalid_argument unless n >= 1, r >= 1 and every coordinate
  /// is finite.
  void validate() const;
};

/// Sensors grouped into blobs (components at distance <= 1) and clouds
/// (components at distance <= 2). Ids follow the smallest contained sensor.
struct Decomposition {
  std::vector<int> blob_of;
  std::vector<int> cloud_of;
  std::vector<int> cloud_of_blob;
  std::vector<std::vector<int>> blobs_in_cloud;
  std::vector<std::vector<int>> sensors_in_blob;
  std::vector<std::vector<int>> sensors_in_cloud;

  int blob_count() const { return static_cast<int>(sensors_in_blob.size()); }
  int cloud_count() const { return static_cast<int>(sensors_in_cloud.size()); }
};

Decomposition build_decomposition(const Instance& inst);

}  // namespace relay
