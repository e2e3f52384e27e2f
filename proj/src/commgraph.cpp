#include "covcon/commgraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace covcon {

CommGraph build_graph_with_range(const Deployment& d, double r_c) {
  CommGraph g;
  g.n = d.size();
  g.r_c = r_c;
  g.adj.assign(static_cast<std::size_t>(g.n), {});
  if (g.n < 2) return g;
  const SensorGrid grid(d.sensors, r_c);
  const double rc2 = r_c * r_c;
  for (int i = 0; i < g.n; ++i) {
    const Point& pi = d.sensors[static_cast<std::size_t>(i)];
    grid.for_candidates(pi, r_c, [&](int j) {
      if (j <= i) return;
      if (dist2(pi, d.sensors[static_cast<std::size_t>(j)]) < rc2) {
        g.adj[static_cast<std::size_t>(i)].push_back(j);
        g.adj[static_cast<std::size_t>(j)].push_back(i);
      }
    });
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

CommGraph build_graph(const Deployment& d) { return build_graph_with_range(d, d.r_c); }

bool is_connected(const CommGraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++visited;
        q.push(v);
      }
    }
  }
  return visited == g.n;
}

SpacingReport check_spacing(const Deployment& d) {
  SpacingReport rep;
  const double bound = d.r_s - d.tau();
  const SensorGrid grid(d.sensors, d.r_s);
  for (int i = 0; i < d.size(); ++i) {
    const Point& pi = d.sensors[static_cast<std::size_t>(i)];
    grid.for_candidates(pi, bound, [&](int j) {
      if (j <= i) return;
      const double dij = dist(pi, d.sensors[static_cast<std::size_t>(j)]);
      if (dij < bound) rep.violating_pairs.push_back({i, j, dij});
    });
  }
  std::sort(rep.violating_pairs.begin(), rep.violating_pairs.end(),
            [](const SpacingViolation& x, const SpacingViolation& y) {
              if (x.distance != y.distance) return x.distance < y.distance;
              if (x.i != y.i) return x.i < y.i;
              return x.j < y.j;
            });
  rep.ok = rep.violating_pairs.empty();
  return rep;
}

double connectivity_margin(const Deployment& d) {
  const int n = d.size();
  if (n < 2) throw std::invalid_argument("connectivity_margin: needs at least 2 sensors");
  // Prim over the complete Euclidean graph; O(n^2) is plenty at desk scale.
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<double> best2(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  in_tree[0] = 1;
  for (int j = 1; j < n; ++j) best2[static_cast<std::size_t>(j)] = dist2(d.sensors[0], d.sensors[static_cast<std::size_t>(j)]);
  double bottleneck2 = 0.0;
  for (int added = 1; added < n; ++added) {
    int pick = -1;
    double pick2 = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (!in_tree[static_cast<std::size_t>(j)] && best2[static_cast<std::size_t>(j)] < pick2) {
        pick2 = best2[static_cast<std::size_t>(j)];
        pick = j;
      }
    }
    in_tree[static_cast<std::size_t>(pick)] = 1;
    bottleneck2 = std::max(bottleneck2, pick2);
    const Point& pp = d.sensors[static_cast<std::size_t>(pick)];
    for (int j = 0; j < n; ++j) {
      if (!in_tree[static_cast<std::size_t>(j)]) {
        best2[static_cast<std::size_t>(j)] =
            std::min(best2[static_cast<std::size_t>(j)], dist2(pp, d.sensors[static_cast<std::size_t>(j)]));
      }
    }
  }
  return std::sqrt(bottleneck2);
}

}  // namespace covcon
