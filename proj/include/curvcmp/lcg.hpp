#pragma once

#include <cstdint>

namespace curvcmp {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// Each draw returns the high 32 bits of the new state. Fixed constants make
/// seeded audits reproducible on every platform.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = kMultiplier * state_ + kIncrement;
    return state_ >> 32;
  }

  /// Uniform-ish draw in [0, bound); bound must be positive and < 2^32.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;
  std::uint64_t state_;
};

}  // namespace curvcmp
