#pragma once

#include <cstdint>

namespace klein {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, increment
/// 0x9E3779B97F4A7C15, output mix with the 30/27/31 xor-shift-multiply
/// finaliser. All randomness in the project flows from one of these seeded by
/// the user-supplied seed, so outputs are identical across platforms.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Independent stream for item `index` of a seeded batch; lets parallel
  /// workers reproduce exactly what a single thread would draw.
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED03ull));
    return SplitMix64(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace klein
