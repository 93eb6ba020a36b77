#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "relay/decomposition.hpp"
#include "relay/relay_set.hpp"

namespace relay {

/// std::mt19937_64 with real draws done by hand: the engine's output sequence
/// is fixed by the standard, the library distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// n points uniform in [0, width]^2.
Instance gen_uniform(int n, double width, double r, std::uint64_t seed);

/// n points spread uniformly over `groups` disks of radius `spread` whose
/// centers are uniform in [0, width]^2.
Instance gen_clustered(int n, int groups, double width, double spread, double r,
                       std::uint64_t seed);

struct Figure8 {
  Instance instance;
  RelaySet certificate;  // one relay per blob
};

/// A row of b two-sensor blobs spaced 1 + r/2 apart. One relay per blob
/// connects everything, while stab-then-merge algorithms pay a red relay per
/// blob plus two greens per gap. Requires b >= 2 and r > 2; the blob count and
/// certificate are checked before returning (std::logic_error on failure).
Figure8 gen_figure8(int b, double r);

struct HardnessCertificate {
  std::vector<Point> relay_points;
  int expected_count = 0;  // |cover| + 2|E| + 1
};

struct Hardness {
  Instance instance;
  HardnessCertificate certificate;
  int expected_blobs = 0;  // 4|E| + 1
  std::vector<std::pair<int, int>> edges;
};

/// Vertex-cover gadget instance with r = 16(|V| + 1). Each vertex v has a good
/// location with its tentacle ends at distance 1; each edge has a crossover
/// with two good locations, each flanked by a tentacle end and an isolated
/// sensor; one more isolated sensor p0 sits near the vertex gadgets.
///
/// Throws std::invalid_argument if the adjacency is not symmetric, a degree
/// exceeds 5, or the cover misses an edge. Structural checks (blob count,
/// region separation, tentacle separation, certificate feasibility) throw
/// std::logic_error on failure.
Hardness gen_hardness(const std::vector<std::vector<int>>& adjacency,
                      const std::vector<int>& vertex_cover);

}  // namespace relay
