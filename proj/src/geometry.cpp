#include "covcon/geometry.hpp"

#include <algorithm>

namespace covcon {

std::vector<Point> circle_circle_intersection(const Point& c1, const Point& c2, double r,
                                              double tau) {
  const double d = dist(c1, c2);
  if (d <= tau) return {};  // concentric (or duplicate centers): no usable intersection
  if (std::abs(d - 2.0 * r) <= tau) {
    return {Point{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0}};
  }
  if (d >= 2.0 * r) return {};
  const double h2 = r * r - d * d / 4.0;
  if (h2 <= 0.0) return {};
  const double h = std::sqrt(h2);
  const Point mid{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0};
  const Point perp{-(c2.y - c1.y) / d, (c2.x - c1.x) / d};
  return {mid + h * perp, mid - h * perp};
}

Point point_on_circle_toward(const Point& center, double r, const Point& target) {
  const double d = dist(center, target);
  if (d == 0.0) {
    throw std::invalid_argument("point_on_circle_toward: undefined direction (center == target)");
  }
  const double s = r / d;
  return {center.x + s * (target.x - center.x), center.y + s * (target.y - center.y)};
}

// ---------------------------------------------------------------------------
// AngularIntervalSet
// ---------------------------------------------------------------------------

AngularIntervalSet AngularIntervalSet::full() {
  AngularIntervalSet s;
  s.arcs_.push_back({0.0, kTwoPi});
  return s;
}

AngularIntervalSet AngularIntervalSet::closed_arc(double start, double end, double ang_tau) {
  AngularIntervalSet s;
  const double len = end - start;
  if (len < 0.0) return s;
  if (len >= kTwoPi - ang_tau) return full();
  const double ns = normalize_angle(start);
  const double ne = ns + len;
  if (ne <= kTwoPi) {
    s.arcs_.push_back({ns, ne});
  } else {
    s.arcs_.push_back({0.0, ne - kTwoPi});
    s.arcs_.push_back({ns, kTwoPi});
  }
  s.normalize(ang_tau);
  return s;
}

void AngularIntervalSet::normalize(double ang_tau) {
  if (arcs_.empty()) return;
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });
  std::vector<Arc> merged;
  merged.push_back(arcs_.front());
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    Arc& cur = merged.back();
    const Arc& nxt = arcs_[i];
    if (nxt.start <= cur.end + ang_tau) {
      cur.end = std::max(cur.end, nxt.end);
    } else {
      merged.push_back(nxt);
    }
  }
  arcs_ = std::move(merged);
}

void AngularIntervalSet::intersect_with(const AngularIntervalSet& other, double ang_tau) {
  std::vector<Arc> out;
  std::size_t i = 0, j = 0;
  while (i < arcs_.size() && j < other.arcs_.size()) {
    const Arc& a = arcs_[i];
    const Arc& b = other.arcs_[j];
    const double lo = std::max(a.start, b.start);
    const double hi = std::min(a.end, b.end);
    if (lo <= hi) out.push_back({lo, hi});  // degenerate point arcs are kept
    if (a.end < b.end) {
      ++i;
    } else {
      ++j;
    }
  }
  arcs_ = std::move(out);
  normalize(ang_tau);
}

double AngularIntervalSet::measure() const {
  double m = 0.0;
  for (const Arc& a : arcs_) m += a.end - a.start;
  return m;
}

bool AngularIntervalSet::contains(double angle, double ang_tau) const {
  const double a = normalize_angle(angle);
  for (const Arc& arc : arcs_) {
    if (arc.start - ang_tau <= a && a <= arc.end + ang_tau) return true;
    if (arc.start - ang_tau <= a + kTwoPi && a + kTwoPi <= arc.end + ang_tau) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Circle clipped to rectangle
// ---------------------------------------------------------------------------

namespace {

enum class ConstraintKind { kFull, kEmpty, kArc };

struct ConstraintArc {
  ConstraintKind kind;
  double start = 0.0;
  double end = 0.0;
};

// cos(theta) >= t
ConstraintArc cos_at_least(double t) {
  if (t <= -1.0) return {ConstraintKind::kFull};
  if (t > 1.0) return {ConstraintKind::kEmpty};
  const double a = std::acos(t);
  return {ConstraintKind::kArc, -a, a};
}

// cos(theta) <= t
ConstraintArc cos_at_most(double t) {
  if (t >= 1.0) return {ConstraintKind::kFull};
  if (t < -1.0) return {ConstraintKind::kEmpty};
  const double a = std::acos(t);
  return {ConstraintKind::kArc, a, kTwoPi - a};
}

// sin(theta) >= t
ConstraintArc sin_at_least(double t) {
  if (t <= -1.0) return {ConstraintKind::kFull};
  if (t > 1.0) return {ConstraintKind::kEmpty};
  const double a = std::asin(t);
  return {ConstraintKind::kArc, a, kPi - a};
}

// sin(theta) <= t
ConstraintArc sin_at_most(double t) {
  if (t >= 1.0) return {ConstraintKind::kFull};
  if (t < -1.0) return {ConstraintKind::kEmpty};
  const double a = std::asin(t);
  return {ConstraintKind::kArc, kPi - a, kTwoPi + a};
}

}  // namespace

AngularIntervalSet circle_rect_angular_intervals(const Point& c, double r, const Rectangle& rect,
                                                 double ang_tau) {
  const ConstraintArc constraints[4] = {
      cos_at_least((0.0 - c.x) / r),     // x >= 0
      cos_at_most((rect.a - c.x) / r),   // x <= a
      sin_at_least((0.0 - c.y) / r),     // y >= 0
      sin_at_most((rect.b - c.y) / r),   // y <= b
  };
  AngularIntervalSet result = AngularIntervalSet::full();
  for (const ConstraintArc& con : constraints) {
    if (con.kind == ConstraintKind::kFull) continue;
    if (con.kind == ConstraintKind::kEmpty) return AngularIntervalSet::none();
    result.intersect_with(AngularIntervalSet::closed_arc(con.start, con.end, ang_tau), ang_tau);
    if (result.empty()) return result;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Disk vs segment
// ---------------------------------------------------------------------------

CoverInterval disk_segment_covered_interval(const Point& c, double r, const Point& s0,
                                            const Point& s1) {
  const Point d = s1 - s0;
  const double a = d.x * d.x + d.y * d.y;
  if (a == 0.0) throw std::invalid_argument("disk_segment_covered_interval: degenerate segment");
  const Point f = s0 - c;
  const double b = 2.0 * (f.x * d.x + f.y * d.y);
  const double cc = f.x * f.x + f.y * f.y - r * r;
  const double disc = b * b - 4.0 * a * cc;
  CoverInterval empty{0.0, 0.0, true, true};
  if (disc <= 0.0) return empty;  // tangent line contributes no open coverage
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  double t1 = q / a;
  double t2 = cc / q;
  if (t1 > t2) std::swap(t1, t2);
  CoverInterval out;
  out.lo = std::max(t1, 0.0);
  out.lo_open = t1 >= 0.0;
  out.hi = std::min(t2, 1.0);
  out.hi_open = t2 <= 1.0;
  if (out.empty()) return empty;
  return out;
}

// ---------------------------------------------------------------------------
// Interval union complement
// ---------------------------------------------------------------------------

std::vector<CoverGap> cover_gaps(double t0, double t1, std::vector<CoverInterval> intervals) {
  // Clip to [t0, t1]; a clipped endpoint becomes closed (the span endpoint was
  // strictly interior to the original interval).
  std::vector<CoverInterval> clipped;
  clipped.reserve(intervals.size());
  for (CoverInterval iv : intervals) {
    if (iv.empty()) continue;
    if (iv.hi < t0 || iv.lo > t1) continue;
    if (iv.lo < t0) {
      iv.lo = t0;
      iv.lo_open = false;
    }
    if (iv.hi > t1) {
      iv.hi = t1;
      iv.hi_open = false;
    }
    if (!iv.empty()) clipped.push_back(iv);
  }
  std::sort(clipped.begin(), clipped.end(), [](const CoverInterval& x, const CoverInterval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.lo_open != y.lo_open) return !x.lo_open;  // closed lo first
    return x.hi > y.hi;
  });

  // Merge into maximal covered pieces, honoring openness: (a,b) and (b,c) do
  // not merge because b itself stays uncovered.
  std::vector<CoverInterval> pieces;
  for (const CoverInterval& iv : clipped) {
    if (!pieces.empty()) {
      CoverInterval& p = pieces.back();
      const bool overlaps = iv.lo < p.hi || (iv.lo == p.hi && !(p.hi_open && iv.lo_open));
      if (overlaps) {
        if (iv.lo == p.lo) p.lo_open = p.lo_open && iv.lo_open;
        if (iv.hi > p.hi) {
          p.hi = iv.hi;
          p.hi_open = iv.hi_open;
        } else if (iv.hi == p.hi) {
          p.hi_open = p.hi_open && iv.hi_open;
        }
        continue;
      }
    }
    pieces.push_back(iv);
  }

  // Complement within [t0, t1].
  std::vector<CoverGap> gaps;
  double cursor = t0;
  bool cursor_in_gap = true;  // t0 itself needs coverage
  auto emit = [&gaps](double lo, bool lo_in, double hi, bool hi_in) {
    if (lo > hi) return;
    if (lo == hi && !(lo_in && hi_in)) return;
    CoverGap g;
    g.lo = lo;
    g.hi = hi;
    g.rep = (lo == hi) ? lo : 0.5 * (lo + hi);
    gaps.push_back(g);
  };
  for (const CoverInterval& p : pieces) {
    emit(cursor, cursor_in_gap, p.lo, p.lo_open);
    cursor = p.hi;
    cursor_in_gap = p.hi_open;
  }
  emit(cursor, cursor_in_gap, t1, true);
  return gaps;
}

}  // namespace covcon
