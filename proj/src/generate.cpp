#include "covcon/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covcon/rng.hpp"

namespace covcon {

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::kTriangularLattice: return "triangular_lattice";
    case GenKind::kJitteredLattice: return "jittered_lattice";
    case GenKind::kHardcoreRandom: return "hardcore_random";
    case GenKind::kAdversarialPairs: return "adversarial_pairs";
  }
  return "unknown";
}

GenKind gen_kind_from_string(const std::string& name) {
  if (name == "triangular_lattice") return GenKind::kTriangularLattice;
  if (name == "jittered_lattice") return GenKind::kJitteredLattice;
  if (name == "hardcore_random") return GenKind::kHardcoreRandom;
  if (name == "adversarial_pairs") return GenKind::kAdversarialPairs;
  throw std::invalid_argument("unknown generator kind: " + name);
}

namespace {

constexpr double kSqrt3Over2 = 0.86602540378443864676;

void validate(const GenSpec& spec) {
  if (!(spec.params.spacing_factor > 0.0) || !std::isfinite(spec.params.spacing_factor)) {
    throw std::invalid_argument("generate: spacing_factor must be positive");
  }
  if (spec.params.jitter < 0.0 || !std::isfinite(spec.params.jitter)) {
    throw std::invalid_argument("generate: jitter must be nonnegative");
  }
  if (spec.params.pair_count < 0) {
    throw std::invalid_argument("generate: pair_count must be nonnegative");
  }
  if (!(spec.params.intensity > 0.0)) {
    throw std::invalid_argument("generate: intensity must be positive");
  }
  if (spec.params.patience < 1) {
    throw std::invalid_argument("generate: patience must be at least 1");
  }
}

/// Evenly spaced coordinates 0..extent with pitch >= target (stretching the
/// pitch up rather than down keeps lattice spacing at or above the target).
struct Axis {
  int count;
  double pitch;
};

Axis fit_axis(double extent, double target) {
  int count = static_cast<int>(std::floor(extent / target)) + 1;
  if (count < 2) count = 2;
  return {count, extent / (count - 1)};
}

std::vector<Point> lattice_points(const GenSpec& spec) {
  const double s = spec.params.spacing_factor * spec.r_s;
  const Axis col = fit_axis(spec.region.a, s);
  const Axis row = fit_axis(spec.region.b, kSqrt3Over2 * s);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(col.count * row.count));
  for (int j = 0; j < row.count; ++j) {
    const double y = std::min(j * row.pitch, spec.region.b);
    if (j % 2 == 0) {
      for (int i = 0; i < col.count; ++i) {
        pts.push_back({std::min(i * col.pitch, spec.region.a), y});
      }
    } else {
      // Offset rows sit between columns; one fewer point keeps them inside.
      for (int i = 0; i + 1 < col.count; ++i) {
        pts.push_back({(i + 0.5) * col.pitch, y});
      }
    }
  }
  return pts;
}

std::vector<Point> jittered_points(const GenSpec& spec) {
  const std::vector<Point> base = lattice_points(spec);
  const double amp = spec.params.jitter;
  if (amp == 0.0) return base;
  const double keep_out = spec.r_s + amp;
  std::vector<Point> out = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    SplitMix64 rng(stream_seed(spec.seed, i));
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Point cand = rng.in_disk(base[i], amp);
      if (!spec.region.contains(cand)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < base.size() && ok; ++j) {
        if (j != i && dist(cand, base[j]) < keep_out) ok = false;
      }
      if (ok) {
        out[i] = cand;
        break;
      }
    }
  }
  return out;
}

std::vector<Point> hardcore_points(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  const double budget = spec.params.intensity * spec.region.a * spec.region.b;
  const long max_candidates = std::lround(std::max(1.0, budget));
  std::vector<Point> kept;
  int consecutive_rejections = 0;
  for (long c = 0; c < max_candidates && consecutive_rejections < spec.params.patience; ++c) {
    const Point p = rng.in_rect(spec.region);
    bool ok = true;
    for (const Point& q : kept) {
      if (dist(p, q) < spec.r_s) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(p);
      consecutive_rejections = 0;
    } else {
      ++consecutive_rejections;
    }
  }
  return kept;
}

std::vector<Point> adversarial_points(const GenSpec& spec) {
  GenSpec base_spec = spec;
  base_spec.seed = stream_seed(spec.seed, 0xBA5Eull);
  std::vector<Point> pts = jittered_points(base_spec);
  const std::size_t n_base = pts.size();
  const double tau = Tolerance::scaled_to(spec.r_s).tau;
  for (int k = 0; k < spec.params.pair_count; ++k) {
    SplitMix64 rng(stream_seed(spec.seed, 0xAD00ull + static_cast<std::uint64_t>(k)));
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const Point target = pts[rng.below(n_base)];
      const double delta = spec.r_s * rng.uniform(0.02, 0.95);
      const double theta = rng.uniform01() * kTwoPi;
      const Point cand{target.x + delta * std::cos(theta), target.y + delta * std::sin(theta)};
      if (!spec.region.contains(cand)) continue;
      bool distinct = true;
      for (const Point& q : pts) {
        if (dist(cand, q) < 2.0 * tau) {
          distinct = false;
          break;
        }
      }
      if (distinct) {
        pts.push_back(cand);
        placed = true;
      }
    }
    if (!placed) {
      throw std::runtime_error("generate: failed to place adversarial pair " + std::to_string(k));
    }
  }
  return pts;
}

}  // namespace

Deployment generate(const GenSpec& spec) {
  validate(spec);
  std::vector<Point> pts;
  switch (spec.kind) {
    case GenKind::kTriangularLattice: pts = lattice_points(spec); break;
    case GenKind::kJitteredLattice: pts = jittered_points(spec); break;
    case GenKind::kHardcoreRandom: pts = hardcore_points(spec); break;
    case GenKind::kAdversarialPairs: pts = adversarial_points(spec); break;
  }
  return make_deployment(std::move(pts), spec.r_s, spec.r_c, spec.region);
}

}  // namespace covcon
