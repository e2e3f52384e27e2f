#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace covcon {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }

inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double dist2(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

/// Euclidean distance. Plain sqrt form; inputs are desk-scale coordinates.
inline double dist(const Point& p, const Point& q) { return std::sqrt(dist2(p, q)); }

/// Axis-aligned rectangle spanning [0,a] x [0,b].
struct Rectangle {
  double a = 0.0;
  double b = 0.0;

  bool contains(const Point& p) const {
    return p.x >= 0.0 && p.x <= a && p.y >= 0.0 && p.y <= b;
  }
  bool contains_with_slack(const Point& p, double slack) const {
    return p.x >= -slack && p.x <= a + slack && p.y >= -slack && p.y <= b + slack;
  }
  Point clamp(const Point& p) const {
    return {std::fmin(std::fmax(p.x, 0.0), a), std::fmin(std::fmax(p.y, 0.0), b)};
  }
  Point center() const { return {a / 2.0, b / 2.0}; }
  /// True iff the region is wide and tall enough relative to the sensing range
  /// (a >= r_s and b >= r_s). Computed, never assumed.
  bool valid_for(double r_s) const { return a >= r_s && b >= r_s; }
};

/// Comparison slack for strict-inequality predicates on lengths.
/// Verification verdicts treat distances within [r - tau, r + tau] as a
/// marginal band and never claim coverage inside it.
struct Tolerance {
  double tau = 1e-9;

  static Tolerance scaled_to(double r_s) { return Tolerance{1e-9 * r_s}; }
  bool valid_for(double r_s) const { return tau > 0.0 && tau < r_s / 1000.0; }
};

/// Unit direction angle of q as seen from p.
inline double angle_of(const Point& from, const Point& to) {
  return std::atan2(to.y - from.y, to.x - from.x);
}

inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// ---------------------------------------------------------------------------
// Circle primitives
// ---------------------------------------------------------------------------

/// Intersection points of two equal-radius circles.
/// Two points iff 0 < d < 2r, one at tangency (|d - 2r| <= tau), none when the
/// circles are too far apart or concentric (d <= tau). The two-point result is
/// ordered deterministically: midpoint + h*perp first, midpoint - h*perp second,
/// where perp is (c2-c1) rotated +90 degrees and normalized.
std::vector<Point> circle_circle_intersection(const Point& c1, const Point& c2, double r,
                                              double tau);

/// The point at distance r from center along the ray toward target.
/// Throws std::invalid_argument when center == target (undefined direction).
Point point_on_circle_toward(const Point& center, double r, const Point& target);

// ---------------------------------------------------------------------------
// Angular interval sets
// ---------------------------------------------------------------------------

/// Subset of the circle as a sorted disjoint list of closed arcs [start, end],
/// normalized into [0, 2pi] (a wrapping arc is split in two). Endpoints within
/// the angular tolerance are merged so near-tangency slivers cannot survive.
class AngularIntervalSet {
 public:
  struct Arc {
    double start = 0.0;
    double end = 0.0;
  };

  static AngularIntervalSet none() { return AngularIntervalSet{}; }
  static AngularIntervalSet full();
  /// Closed arc from start to end going counterclockwise; wraps when needed.
  static AngularIntervalSet closed_arc(double start, double end, double ang_tau);

  void intersect_with(const AngularIntervalSet& other, double ang_tau);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  double measure() const;
  bool contains(double angle, double ang_tau) const;

 private:
  std::vector<Arc> arcs_;  // sorted by start, disjoint, within [0, 2pi]
  void normalize(double ang_tau);
};

/// Angles theta for which c + r*(cos theta, sin theta) lies inside the closed
/// rectangle. Built by intersecting the four half-plane constraints, each of
/// which cuts the circle in one arc.
AngularIntervalSet circle_rect_angular_intervals(const Point& c, double r, const Rectangle& rect,
                                                 double ang_tau);

// ---------------------------------------------------------------------------
// Segment coverage intervals
// ---------------------------------------------------------------------------

/// Sub-interval of [0,1] with per-endpoint openness. Used for bookkeeping of
/// which part of a segment (or arc span) lies strictly inside an open disk.
struct CoverInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = true;
  bool hi_open = true;

  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
  bool covers(double t) const {
    return (t > lo || (t == lo && !lo_open)) && (t < hi || (t == hi && !hi_open));
  }
};

/// Parameter interval of seg(t) = s0 + t*(s1-s0), t in [0,1], where the segment
/// point is at distance < r from c. The underlying set is the open root
/// interval of |seg(t)-c|^2 = r^2 clipped to [0,1]; clipped ends are closed.
/// Throws std::invalid_argument for coincident segment endpoints.
CoverInterval disk_segment_covered_interval(const Point& c, double r, const Point& s0,
                                            const Point& s1);

/// One connected component of [t0,t1] minus a union of CoverIntervals.
/// rep is a point of the gap (the midpoint, or the point itself for a
/// degenerate single-point gap); lo/hi bound the gap's closure.
struct CoverGap {
  double lo = 0.0;
  double hi = 0.0;
  double rep = 0.0;
};

/// Exact complement of the interval union within the closed span [t0,t1].
/// Openness is honored: two open intervals abutting at p leave the single
/// uncovered point p as a gap.
std::vector<CoverGap> cover_gaps(double t0, double t1, std::vector<CoverInterval> intervals);

}  // namespace covcon
