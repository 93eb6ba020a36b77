#include "relay/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "relay/spatial_hash.hpp"

namespace relay {

void Instance::validate() const {
  if (sensors.empty()) throw std::invalid_argument("instance has no sensors");
  if (!std::isfinite(r) || r < 1.0) {
    throw std::invalid_argument("relay range r must be finite and >= 1, got " + std::to_string(r));
  }
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    if (!is_finite(sensors[i])) {
      throw std::invalid_argument("sensor " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (!(tol.eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
}

Decomposition build_decomposition(const Instance& inst) {
  Decomposition dec;
  dec.blob_of = threshold_components(inst.sensors, 1.0, inst.tol);
  dec.cloud_of = threshold_components(inst.sensors, 2.0, inst.tol);

  int blobs = 0;
  int clouds = 0;
  for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
    blobs = std::max(blobs, dec.blob_of[i] + 1);
    clouds = std::max(clouds, dec.cloud_of[i] + 1);
  }
  dec.sensors_in_blob.resize(blobs);
  dec.sensors_in_cloud.resize(clouds);
  dec.blobs_in_cloud.resize(clouds);
  dec.cloud_of_blob.assign(blobs, -1);

  // Both labelings number components by first sensor, so blob ids within a
  // cloud come out ascending.
  for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
    const int b = dec.blob_of[i];
    const int c = dec.cloud_of[i];
    dec.sensors_in_blob[b].push_back(static_cast<int>(i));
    dec.sensors_in_cloud[c].push_back(static_cast<int>(i));
    if (dec.cloud_of_blob[b] < 0) {
      dec.cloud_of_blob[b] = c;
      dec.blobs_in_cloud[c].push_back(b);
    }
  }
  return dec;
}

}  // namespace relay
