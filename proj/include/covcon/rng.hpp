#pragma once

#include <cstdint>

#include "covcon/geometry.hpp"

namespace covcon {

/// SplitMix64 (Steele, Lea, Flood). Fixed algorithm, identical output on every
/// platform; all randomized code in this project draws from it so seeded runs
/// are byte-reproducible. Per-point/per-trial child streams are derived with
/// stream_seed, which makes parallel generation schedule-independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). Multiply-shift; bias is negligible for the
  /// desk-scale n used here and the result is platform-independent.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Uniform point in the closed disk of radius r around center.
  Point in_disk(const Point& center, double r) {
    const double theta = uniform01() * kTwoPi;
    const double rad = r * std::sqrt(uniform01());
    return {center.x + rad * std::cos(theta), center.y + rad * std::sin(theta)};
  }

  Point in_rect(const Rectangle& rect) { return {uniform(0.0, rect.a), uniform(0.0, rect.b)}; }

 private:
  std::uint64_t state_;
};

/// Seed for an independent child stream (root, index).
inline std::uint64_t stream_seed(std::uint64_t root, std::uint64_t index) {
  SplitMix64 g(root + (index + 1) * 0x9E3779B97F4A7C15ull);
  return g.next();
}

}  // namespace covcon
