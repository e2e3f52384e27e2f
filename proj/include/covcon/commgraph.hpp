#pragma once

#include <vector>

#include "covcon/coverage.hpp"

namespace covcon {

/// Communication graph: nodes are sensor ids, an edge joins i and j iff
/// dist(sensor_i, sensor_j) < r_c (strict). Symmetric, no self-loops.
struct CommGraph {
  int n = 0;
  double r_c = 0.0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (const auto& nb : adj) deg += nb.size();
    return deg / 2;
  }
};

/// Builds the graph via a uniform spatial hash with cell size r_c; identical
/// to the quadratic all-pairs reference.
CommGraph build_graph(const Deployment& d);

/// Same, with an explicit communication range instead of d.r_c.
CommGraph build_graph_with_range(const Deployment& d, double r_c);

/// True iff all nodes lie in one component. 0- and 1-node graphs are
/// connected by convention (keeps vacuous hypotheses total).
bool is_connected(const CommGraph& g);

struct SpacingViolation {
  int i = 0;
  int j = 0;  // i < j
  double distance = 0.0;
};

/// Minimum-spacing check: ok iff every pair is at distance >= r_s - tau.
/// A pair at distance exactly r_s is allowed. Violations are sorted by
/// distance, then by ids, so reports are reproducible.
struct SpacingReport {
  bool ok = true;
  std::vector<SpacingViolation> violating_pairs;
};

SpacingReport check_spacing(const Deployment& d);

/// Bottleneck connectivity radius: the longest edge of a Euclidean minimum
/// spanning tree, i.e. the smallest r such that the graph with communication
/// range r + tau is connected. Throws std::invalid_argument for n < 2.
double connectivity_margin(const Deployment& d);

}  // namespace covcon
