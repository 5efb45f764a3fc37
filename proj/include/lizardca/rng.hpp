#pragma once

#include <cstdint>

namespace lizardca {

/// splitmix64, the project's only random source (see docs/FORMATS.md).
/// State advances by the golden-gamma constant and the output is a finalized
/// mix of it (Steele, Lea & Flood 2014; Vigna's public-domain reference).
/// Every run of the engine is exactly reproducible from a 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace lizardca
