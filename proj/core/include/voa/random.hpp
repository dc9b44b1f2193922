#pragma once

#include <cstdint>
#include <random>

namespace voa {

/// Seeded source of the uniform draws used throughout the optimizer.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard, so a given seed yields the same draws on every conforming
/// platform. Unit draws take the top 53 bits of each 64-bit output, which
/// avoids the implementation-defined behavior of
/// std::uniform_real_distribution.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  /// Next draw in [0, 1).
  double uniform_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// lower + uniform_unit() * (upper - lower). Throws ConfigError if
  /// lower >= upper. The result is pulled back below `upper` in the rare
  /// case rounding lands exactly on it.
  double uniform_in(double lower, double upper);

  std::uint64_t seed() const noexcept { return seed_; }

private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace voa
