#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covcon/coverage.hpp"

namespace covcon {

/// sqrt(2 + sqrt(3)) = 1.9318516525781366..., the smallest communication/
/// sensing-range ratio this toolkit certifies: full coverage plus pairwise
/// spacing >= r_s implies connectivity at r_c >= bound_constant() * r_s.
double bound_constant();

/// Raised when a geometric guarantee the connectivity argument relies on
/// fails at runtime. For covered, spacing-compliant inputs this is impossible
/// unless a checker or tolerance is defective, so the offending deployment is
/// carried along for serialization as a reproducer.
class FalsificationError : public std::runtime_error {
 public:
  FalsificationError(const std::string& what, Deployment offending)
      : std::runtime_error(what), deployment_(std::move(offending)) {}
  const Deployment& deployment() const { return deployment_; }

 private:
  Deployment deployment_;
};

struct Relay {
  Point via;  // the chosen circle-circle intersection point, inside the region
  int y_id = 0;
};

/// One advance of the frontier: from u, aim at the destination v, take the
/// point w on u's sensing circle toward v, pick a sensor x covering w, and
/// hop directly (dist(u,x) < r_c) or through a relay y covering one of the
/// intersection points of the two sensing circles.
struct MacroStep {
  int from_id = 0;
  Point w;
  int x_id = 0;
  std::optional<Relay> relay;
  std::vector<int> hop_ids;  // [x] or [y, x]
};

struct RouteTrace {
  int source_id = 0;
  int dest_id = 0;
  std::vector<MacroStep> steps;
  std::vector<int> path;  // source ... dest, consecutive distances < r_c
};

/// Computes one macro-step from u toward v.
///
/// Candidate choice: among sensors covering w (u excluded), the one closest
/// to v, ties to the smaller id. When a relay is needed, the intersection
/// point whose covering relay minimizes the worse of the two hops wins.
///
/// Preconditions the caller owns: the deployment covers the region, satisfies
/// the spacing constraint, and the region is valid. Cheap preconditions are
/// enforced here: valid ids, dist(u,v) >= r_c (otherwise no step is needed)
/// and r_c >= bound_constant()*r_s - tau. Geometric guarantees are asserted
/// and surface as FalsificationError when violated.
MacroStep next_hop(int u_id, int v_id, const Deployment& d);

/// Iterates next_hop until the frontier is within r_c of the destination,
/// then appends it. Progress is strict (each frontier is closer to v), so
/// more than n macro-steps is a falsification.
RouteTrace build_route(int u_id, int v_id, const Deployment& d);

}  // namespace covcon
