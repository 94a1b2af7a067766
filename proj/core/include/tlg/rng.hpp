#pragma once

#include <cstdint>

namespace tlg {

/// splitmix64 (Steele, Lea, Flood). Single fixed generator for the whole
/// repository so that seeded runs are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, k). Modulo reduction; the bias is below 2^-50
  /// for every k used in this project.
  int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace tlg
