#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covcon/geometry.hpp"

namespace covcon {

/// A sensor deployment: positions (index = sensor id), sensing range r_s,
/// communication range r_c, the rectangular region, and the comparison
/// tolerance. The universe object every checker consumes. Construct through
/// make_deployment, which validates the invariants.
struct Deployment {
  std::vector<Point> sensors;
  double r_s = 1.0;
  double r_c = 2.0;
  Rectangle region;
  Tolerance tol;

  int size() const { return static_cast<int>(sensors.size()); }
  bool region_valid() const { return region.valid_for(r_s); }
  double tau() const { return tol.tau; }
};

/// Validates and builds a Deployment. Throws std::invalid_argument on:
/// nonpositive or nonfinite ranges/region, tolerance out of policy bounds,
/// a sensor outside the closed region, or two sensors closer than tau
/// (degenerate duplicates break arc bookkeeping and trivially violate the
/// minimum-spacing constraint, so they are rejected up front).
Deployment make_deployment(std::vector<Point> sensors, double r_s, double r_c, Rectangle region,
                           std::optional<double> tau = std::nullopt);

/// Uniform hash grid over sensor positions for neighborhood queries.
class SensorGrid {
 public:
  SensorGrid() = default;
  SensorGrid(const std::vector<Point>& pts, double cell);

  /// Calls f(id) for every sensor in cells overlapping the square
  /// [p.x - radius, p.x + radius] x [p.y - radius, p.y + radius].
  template <class F>
  void for_candidates(const Point& p, double radius, F&& f) const {
    if (ids_.empty()) return;
    const auto [cx0, cy0] = cell_of({p.x - radius, p.y - radius});
    const auto [cx1, cy1] = cell_of({p.x + radius, p.y + radius});
    for (std::int64_t cy = std::max(cy0, std::int64_t{0});
         cy <= std::min(cy1, ny_ - 1); ++cy) {
      for (std::int64_t cx = std::max(cx0, std::int64_t{0});
           cx <= std::min(cx1, nx_ - 1); ++cx) {
        const std::size_t k = static_cast<std::size_t>(cy * nx_ + cx);
        for (int i = starts_[k]; i < starts_[k + 1]; ++i) f(ids_[i]);
      }
    }
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(const Point& p) const;
  double cell_ = 1.0;
  double ox_ = 0.0, oy_ = 0.0;
  std::int64_t nx_ = 0, ny_ = 0;
  std::vector<int> starts_;
  std::vector<int> ids_;
};

/// Coverage verdict. witness is an uncovered point of the closed region,
/// present iff covered == false. marginal means the verdict flipped inside the
/// [r_s - tau, r_s + tau] band and the conservative reading (uncovered) was
/// reported.
struct CoverageReport {
  bool covered = false;
  std::optional<Point> witness;
  bool marginal = false;
};

/// Open-disk point coverage with the conservative band: true iff some sensor
/// is strictly closer than r_s - tau.
bool is_point_covered(const Point& p, const Deployment& d);

/// Exact 1-coverage check of the closed rectangle by the union of open disks.
///
/// Method: the region is covered iff (a) each of the four boundary edges is
/// contained in the union of open covered sub-intervals and (b) for every
/// sensor, the part of its sensing circle inside the closed rectangle is
/// covered by the other sensors' open disks.
///
/// Why edges + circles suffice: the union U of open disks is open. Suppose all
/// edge points and all in-region circle points are covered but some p in the
/// region is not. Sensors exist (else (a) failed), and a sensor position is
/// covered, so the segment from p to it -- inside the region by convexity --
/// crosses the boundary of U at some x. x is uncovered (U is open), lies in
/// the region, and the boundary of a union of open disks lies on the circles,
/// so x is an uncovered in-region circle point, contradicting (b).
///
/// The check runs twice, with disks shrunk to r_s - tau and grown to
/// r_s + tau; disagreement between the passes is reported as marginal with
/// the conservative (uncovered) verdict. Witness preference: boundary-edge
/// gaps first, then circle-arc gaps, in deterministic scan order.
CoverageReport check_coverage(const Deployment& d);

/// Brute-force grid oracle at pitch `step`, covering all grid points of the
/// closed rectangle including the exact boundary rows/columns. One-sided:
/// "uncovered" is definitive, "covered" only up to grid resolution. The
/// witness is the first uncovered grid point in row-major scan order
/// (y outer, x inner). Throws std::invalid_argument when step <= 0 or
/// step >= r_s. threads = 0 picks hardware concurrency; the result is
/// identical for any thread count.
CoverageReport sample_coverage_oracle(const Deployment& d, double step, int threads = 1);

/// An uncovered point of the closed region lying within distance r_s (+tau)
/// of `center`, or nullopt when the region is covered. Searches the exact
/// checker's edge/arc gaps restricted to that disk first, then falls back to
/// sampling the disk at pitch r_s/500. Throws std::runtime_error if the
/// region is uncovered but no witness can be located inside the disk.
std::optional<Point> uncovered_witness_in_disk(const Deployment& d, const Point& center);

}  // namespace covcon
