#pragma once

#include <cstdint>
#include <vector>

#include "llg/box.hpp"

namespace llg {

// SplitMix64: the reference 64-bit mixer, used so that sample sets are
// identical on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// `count` points drawn uniformly from the box, coordinates in declaration
// order.
std::vector<Point> sample_points(const Box& box, int count, std::uint64_t seed);

}  // namespace llg
