#include "covcon/routing.hpp"

#include <cmath>
#include <limits>

namespace covcon {

double bound_constant() { return std::sqrt(2.0 + std::sqrt(3.0)); }

namespace {

void check_ids(int u_id, int v_id, const Deployment& d, const char* who) {
  if (u_id < 0 || u_id >= d.size() || v_id < 0 || v_id >= d.size()) {
    throw std::invalid_argument(std::string(who) + ": sensor id out of range");
  }
}

void check_ratio(const Deployment& d, const char* who) {
  if (d.r_c < bound_constant() * d.r_s - d.tau()) {
    throw std::invalid_argument(std::string(who) +
                                ": r_c below bound_constant()*r_s; no connectivity guarantee");
  }
}

}  // namespace

MacroStep next_hop(int u_id, int v_id, const Deployment& d) {
  check_ids(u_id, v_id, d, "next_hop");
  check_ratio(d, "next_hop");
  const Point u = d.sensors[static_cast<std::size_t>(u_id)];
  const Point v = d.sensors[static_cast<std::size_t>(v_id)];
  if (dist(u, v) < d.r_c) {
    throw std::invalid_argument("next_hop: u and v already communicate; no step needed");
  }

  MacroStep step;
  step.from_id = u_id;
  step.w = point_on_circle_toward(u, d.r_s, v);

  // x: the sensor covering w that makes the most progress toward v.
  int x_id = -1;
  double best_dv = std::numeric_limits<double>::infinity();
  for (int j = 0; j < d.size(); ++j) {
    if (j == u_id) continue;  // w lies on u's own circle, uncovered by u
    const Point& cj = d.sensors[static_cast<std::size_t>(j)];
    if (dist(cj, step.w) < d.r_s) {
      const double dv = dist(cj, v);
      if (dv < best_dv) {
        best_dv = dv;
        x_id = j;
      }
    }
  }
  if (x_id < 0) {
    throw FalsificationError("next_hop: no sensor covers w (coverage hypothesis violated)", d);
  }
  step.x_id = x_id;
  const Point x = d.sensors[static_cast<std::size_t>(x_id)];

  if (!(dist(x, v) < dist(u, v))) {
    throw FalsificationError("next_hop: x is not closer to v than u (progress violated)", d);
  }

  if (dist(u, x) < d.r_c) {
    step.hop_ids = {x_id};
    return step;
  }

  // Relay case: dist(u,x) >= r_c. The sensing circles of u and x intersect in
  // two points s,t with dist(s,t) < r_s, at least one of them inside the
  // region; a sensor covering it reaches both u and x within r_c.
  const std::vector<Point> inter = circle_circle_intersection(u, x, d.r_s, d.tau());
  if (inter.size() != 2) {
    throw FalsificationError("next_hop: sensing circles of u and x do not properly intersect", d);
  }
  if (!(dist(inter[0], inter[1]) < d.r_s)) {
    throw FalsificationError("next_hop: intersection chord not shorter than r_s", d);
  }

  int best_y = -1;
  Point best_via;
  double best_worse_hop = std::numeric_limits<double>::infinity();
  bool any_inside = false;
  for (const Point& cand : inter) {
    if (!d.region.contains_with_slack(cand, d.tau())) continue;
    any_inside = true;
    const Point via = d.region.clamp(cand);
    for (int j = 0; j < d.size(); ++j) {
      if (j == u_id || j == x_id) continue;  // via lies on both circles
      const Point& cj = d.sensors[static_cast<std::size_t>(j)];
      if (dist(cj, via) < d.r_s) {
        const double worse = std::max(dist(u, cj), dist(cj, x));
        if (worse < best_worse_hop) {
          best_worse_hop = worse;
          best_y = j;
          best_via = via;
        }
      }
    }
  }
  if (!any_inside) {
    throw FalsificationError("next_hop: neither circle intersection point lies in the region", d);
  }
  if (best_y < 0) {
    throw FalsificationError(
        "next_hop: no sensor covers the in-region intersection point (coverage hypothesis "
        "violated)",
        d);
  }
  const Point y = d.sensors[static_cast<std::size_t>(best_y)];
  if (!(dist(u, y) < d.r_c) || !(dist(y, x) < d.r_c)) {
    throw FalsificationError("next_hop: relay hop reaches r_c (hop bound violated)", d);
  }
  step.relay = Relay{best_via, best_y};
  step.hop_ids = {best_y, x_id};
  return step;
}

RouteTrace build_route(int u_id, int v_id, const Deployment& d) {
  check_ids(u_id, v_id, d, "build_route");
  RouteTrace trace;
  trace.source_id = u_id;
  trace.dest_id = v_id;
  trace.path.push_back(u_id);
  if (u_id == v_id) return trace;
  check_ratio(d, "build_route");

  const Point v = d.sensors[static_cast<std::size_t>(v_id)];
  int frontier = u_id;
  while (dist(d.sensors[static_cast<std::size_t>(frontier)], v) >= d.r_c) {
    if (trace.steps.size() >= static_cast<std::size_t>(d.size())) {
      throw FalsificationError("build_route: step count exceeded node count (non-termination)",
                               d);
    }
    MacroStep step = next_hop(frontier, v_id, d);
    frontier = step.x_id;
    for (int id : step.hop_ids) trace.path.push_back(id);
    trace.steps.push_back(std::move(step));
  }
  if (trace.path.back() != v_id) trace.path.push_back(v_id);
  return trace;
}

}  // namespace covcon
