#include "covcon/redistribute.hpp"

#include <cmath>
#include <stdexcept>

#include "covcon/commgraph.hpp"
#include "covcon/rng.hpp"

namespace covcon {

RedistributionResult redistribute(const Deployment& d) {
  if (!d.region_valid()) {
    throw std::invalid_argument("redistribute: region smaller than the sensing range");
  }
  if (!check_coverage(d).covered) {
    throw std::invalid_argument("redistribute: input not covering");
  }

  RedistributionResult result;
  Deployment cur = d;
  const std::size_t initial_violations = check_spacing(cur).violating_pairs.size();
  // Each iteration retires at least one violating pair, so this cannot spin.
  const std::size_t max_iterations = initial_violations + 1;

  for (;;) {
    const SpacingReport spacing = check_spacing(cur);
    if (spacing.ok) break;
    if (static_cast<std::size_t>(result.iterations) >= max_iterations) {
      throw std::runtime_error("redistribute: violating-pair count failed to decrease");
    }

    const SpacingViolation worst = spacing.violating_pairs.front();
    RedistributionStep step;
    step.removed_id = worst.j;  // the larger id of the closest pair
    step.partner_id = worst.i;
    step.removed_pos = cur.sensors[static_cast<std::size_t>(worst.j)];
    cur.sensors.erase(cur.sensors.begin() + worst.j);

    while (!check_coverage(cur).covered) {
      std::optional<Point> w = uncovered_witness_in_disk(cur, step.removed_pos);
      if (!w) break;  // covered after all (marginal flip); loop re-checks
      const Point placed = cur.region.clamp(*w);
      cur.sensors.push_back(placed);
      step.added.push_back(placed);
      if (step.added.size() > 6) {
        throw std::runtime_error(
            "redistribute: step needed more than 6 additions (packing bound violated; "
            "indicates a witness-search or tolerance defect)");
      }
    }

    result.steps.push_back(std::move(step));
    ++result.iterations;
  }

  result.final = std::move(cur);
  return result;
}

int max_packing_in_disk(double r, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("max_packing_in_disk: trials must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("max_packing_in_disk: radius must be positive");
  const double tau = Tolerance::scaled_to(r).tau;
  constexpr int kPatience = 200;
  const Point center{0.0, 0.0};
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<Point> kept;
    int rejections = 0;
    while (rejections < kPatience) {
      const Point p = rng.in_disk(center, r);
      if (dist(p, center) < tau) {  // the center itself is excluded
        ++rejections;
        continue;
      }
      bool ok = true;
      for (const Point& q : kept) {
        if (dist(p, q) < r) {
          ok = false;
          break;
        }
      }
      if (ok) {
        kept.push_back(p);
        rejections = 0;
      } else {
        ++rejections;
      }
    }
    best = std::max(best, static_cast<int>(kept.size()));
  }
  return best;
}

std::vector<Point> hexagon_packing(double r) {
  std::vector<Point> pts;
  pts.reserve(6);
  for (int k = 0; k < 6; ++k) {
    const double theta = k * (kPi / 3.0);
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

bool is_valid_packing(const std::vector<Point>& pts, double r, double tau) {
  const Point center{0.0, 0.0};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dist(pts[i], center) > r + tau) return false;
    if (dist(pts[i], center) < tau) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (dist(pts[i], pts[j]) < r - tau) return false;
    }
  }
  return true;
}

}  // namespace covcon
