#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/normal.hpp"
#include "topo/triangulation.hpp"

namespace topo {

struct EnumerationQuery {
  Triangulation tri;
  int64_t max_w1 = 1;
  std::optional<std::vector<int>> support;  // restrict nonzero tets
  bool closed_only = false;  // discard vectors with arcs on boundary faces
  // Guard against runaway result sets; exceeding it raises an error carrying
  // the partial count.
  size_t result_limit = 10'000'000;
};

// Every nonzero admissible vector with w1 <= max_w1 (and satisfying the
// optional restrictions), exactly once, in lexicographic order.
std::vector<NormalVector> enumerate_admissible(const EnumerationQuery& q);

// The connected vectors among enumerate_admissible(q), with their Euler
// characteristics.
std::vector<SurfaceComponent> enumerate_connected(const EnumerationQuery& q);

// Stream format: `count K`, then normal-vector blocks separated by blank
// lines.
std::string serialize_enumeration(const std::vector<NormalVector>& vs);

}  // namespace topo
