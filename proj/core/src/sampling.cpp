#include "llg/sampling.hpp"

namespace llg {

std::vector<Point> sample_points(const Box& box, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Point> out;
  out.reserve(count > 0 ? count : 0);
  for (int p = 0; p < count; ++p) {
    Point x(box.dim());
    for (int i = 0; i < box.dim(); ++i) {
      const auto [lo, hi] = box.bounds[i];
      x[i] = lo + rng.uniform() * (hi - lo);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace llg
