#pragma once

#include <cstdint>
#include <string>

#include "covcon/coverage.hpp"

namespace covcon {

enum class GenKind {
  kTriangularLattice,
  kJitteredLattice,
  kHardcoreRandom,
  kAdversarialPairs,
};

const char* to_string(GenKind kind);
GenKind gen_kind_from_string(const std::string& name);

struct GenParams {
  double spacing_factor = 1.0;  // lattice spacing = factor * r_s
  double jitter = 0.0;          // per-point jitter amplitude (absolute length)
  double intensity = 200.0;     // hardcore: candidate samples per unit area
  int pair_count = 0;           // adversarial: injected close pairs
  int patience = 500;           // hardcore: consecutive rejections before stop
};

/// Deterministic deployment generator spec. Same spec (including seed) gives
/// the same deployment on every platform and run.
struct GenSpec {
  Rectangle region{10.0, 10.0};
  double r_s = 1.0;
  double r_c = 2.0;
  GenKind kind = GenKind::kTriangularLattice;
  GenParams params;
  std::uint64_t seed = 0;
};

/// Generates a deployment:
///  - triangular_lattice: rows offset by half the spacing, stretched to end
///    exactly on the region boundary so edges and corners stay covered.
///  - jittered_lattice: lattice plus per-point jitter from an independent
///    per-point stream; a jitter is kept only when the moved point stays in
///    the region and at distance >= r_s + jitter from every other base point,
///    which preserves the spacing constraint regardless of evaluation order.
///  - hardcore_random: sequential uniform candidates, keeping those at
///    distance >= r_s from all kept points, until `patience` consecutive
///    rejections or the intensity budget runs out. No coverage promise.
///  - adversarial_pairs: jittered lattice plus pair_count extra sensors, each
///    placed inside (0, r_s) of a randomly chosen existing sensor.
Deployment generate(const GenSpec& spec);

}  // namespace covcon
