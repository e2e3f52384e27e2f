#pragma once

// Shared helpers and independent oracles for the test suites. Everything here
// must stay independent of the library code paths it cross-checks: graphs are
// rebuilt by brute force, bottlenecks by Kruskal instead of Prim, coverage by
// dense sampling.

#include <algorithm>
#include <numeric>
#include <vector>

#include "covcon/commgraph.hpp"
#include "covcon/coverage.hpp"
#include "covcon/rng.hpp"

namespace covcon::testing {

/// Uniform random sensors in the closed region, at least 2*tau apart.
inline std::vector<Point> random_points(SplitMix64& rng, const Rectangle& region, int n,
                                        double min_sep) {
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p = rng.in_rect(region);
    bool ok = true;
    for (const Point& q : pts) {
      if (dist(p, q) < min_sep) {
        ok = false;
        break;
      }
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

inline Deployment random_deployment(std::uint64_t seed, const Rectangle& region, int n,
                                    double r_s, double r_c) {
  SplitMix64 rng(seed);
  const double tau = Tolerance::scaled_to(r_s).tau;
  return make_deployment(random_points(rng, region, n, 2.0 * tau), r_s, r_c, region);
}

/// Quadratic reference graph (strict < r_c), for comparison with the spatial
/// hash builder.
inline std::vector<std::vector<int>> brute_force_adjacency(const std::vector<Point>& pts,
                                                           double r_c) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) < r_c) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  return adj;
}

/// Component count by iterative depth-first traversal.
inline int component_count(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

/// MST bottleneck via Kruskal over all pairs (independent of the Prim-based
/// implementation).
inline double kruskal_bottleneck(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  struct E {
    double w;
    int i, j;
  };
  std::vector<E> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back(
          {dist(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]), i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) { return a.w < b.w; });
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  double bottleneck = 0.0;
  int joined = 0;
  for (const E& e : edges) {
    const int a = find(e.i), b = find(e.j);
    if (a == b) continue;
    parent[static_cast<std::size_t>(a)] = b;
    bottleneck = std::max(bottleneck, e.w);
    if (++joined == n - 1) break;
  }
  return bottleneck;
}

/// Covered, spacing-compliant deployment: saturated hard-core placement plus
/// a patch loop that drops sensors onto uncovered witnesses until the exact
/// checker is satisfied. Witness points are uncovered, hence at distance
/// >= r_s from everything already placed, so spacing holds by construction.
inline Deployment covered_hardcore(std::uint64_t seed, const Rectangle& region, double r_s,
                                   double r_c) {
  SplitMix64 rng(seed);
  std::vector<Point> pts;
  int rejects = 0;
  while (rejects < 2000) {
    const Point p = rng.in_rect(region);
    bool ok = true;
    for (const Point& q : pts) {
      if (dist(p, q) < r_s) {
        ok = false;
        break;
      }
    }
    if (ok) {
      pts.push_back(p);
      rejects = 0;
    } else {
      ++rejects;
    }
  }
  Deployment d = make_deployment(std::move(pts), r_s, r_c, region);
  for (;;) {
    const CoverageReport rep = check_coverage(d);
    if (rep.covered) return d;
    d.sensors.push_back(d.region.clamp(*rep.witness));
  }
}

}  // namespace covcon::testing
