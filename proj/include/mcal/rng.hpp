// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mcal {

/// SplitMix64 finalizer: bijective 64-bit mix with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Counter-based generator keyed by (seed, stream): draw i of a stream is a
/// pure function of (seed, stream, i), so results are independent of thread
/// count and streams can be evaluated in any order.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix64(mix64(seed + kGamma) + (stream + 1) * kGamma)) {}

  std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1).
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the paired draw is cached, so each pair
  /// of calls consumes exactly two uniforms.
  double next_normal() noexcept {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace mcal
