#pragma once

#include <cstdint>
#include <vector>

#include "covcon/coverage.hpp"

namespace covcon {

/// One elimination step: the removed sensor, its too-close partner, and the
/// patch sensors added to restore coverage. Every added point was uncovered at
/// its insertion instant and lies within r_s (+tau) of the removed position;
/// at most 6 additions are ever needed per step.
struct RedistributionStep {
  int removed_id = 0;
  Point removed_pos;
  int partner_id = 0;
  std::vector<Point> added;
};

struct RedistributionResult {
  Deployment final;
  std::vector<RedistributionStep> steps;
  int iterations = 0;
};

/// Transforms a covering deployment into one whose pairwise spacing is at
/// least r_s while preserving 1-coverage. While a violating pair exists, the
/// closest pair is selected (ties by ids), its larger-id member removed, and
/// coverage holes are patched one uncovered witness at a time.
///
/// Ids in each step refer to positions in the deployment as it stood at the
/// start of that iteration (removal shifts later ids down by one).
///
/// Throws std::invalid_argument when the input does not cover the region or
/// the region is too small for the sensing range, and std::runtime_error if a
/// step would need more than 6 additions (a checker/tolerance defect, never a
/// valid outcome).
RedistributionResult redistribute(const Deployment& d);

/// Randomized greedy packing search inside the closed disk of radius r:
/// uniform samples (excluding the center) are kept when at distance >= r from
/// every kept point; returns the largest packing size seen over `trials`
/// independent trials. Empirical companion to the 6-point packing limit.
int max_packing_in_disk(double r, int trials, std::uint64_t seed);

/// The six vertices of a regular hexagon inscribed at radius r: the extremal
/// packing (adjacent vertices at distance exactly r).
std::vector<Point> hexagon_packing(double r);

/// True iff pts all lie in the closed disk of radius r around the origin,
/// none within tau of the center, and pairwise distances are >= r - tau.
bool is_valid_packing(const std::vector<Point>& pts, double r, double tau);

}  // namespace covcon
