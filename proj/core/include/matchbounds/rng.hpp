#pragma once

#include <cstdint>

namespace matchbounds {

/// SplitMix64. Small, fast, and good enough for Monte Carlo sampling of
/// matchings; see https://prng.di.unimi.it.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from {0, ..., bound-1} by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound; // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based stream: the state for (seed, counter) is a hash of the pair,
/// so trial number t always sees the same stream no matter which worker runs
/// it. This is what makes Monte Carlo results independent of --threads.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t counter) {
  return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ull * (counter + 1)) ^ mix64(counter + 0x632be59bd9b4e019ull));
}

} // namespace matchbounds
