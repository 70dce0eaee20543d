#pragma once

#include <cstdint>

namespace specbound {

/// SplitMix64 (Steele, Lea, Flood): 64-bit state, fixed output sequence on
/// every platform, so seeded scans reproduce byte-for-byte across machines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound) via the 128-bit multiply-shift reduction.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for instance `index` of a batch seeded with `seed`:
/// the generator is seeded with seed XOR (0xD1B54A32D192ED03 * (index + 1)).
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
}

}  // namespace specbound
