#pragma once

#include <span>
#include <utility>
#include <vector>

namespace llg {

using Point = std::vector<double>;

// Axis-aligned domain box: one closed interval per chart coordinate.
struct Box {
  std::vector<std::pair<double, double>> bounds;

  int dim() const noexcept { return static_cast<int>(bounds.size()); }

  bool contains(std::span<const double> x) const noexcept {
    if (static_cast<int>(x.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i) {
      if (!(x[i] >= bounds[i].first && x[i] <= bounds[i].second)) return false;
    }
    return true;
  }

  // Box shrunk by `fraction` of each side's width at both ends.
  Box shrunk(double fraction) const {
    Box r = *this;
    for (auto& [lo, hi] : r.bounds) {
      const double m = fraction * (hi - lo);
      lo += m;
      hi -= m;
    }
    return r;
  }

  friend bool operator==(const Box&, const Box&) = default;
};

}  // namespace llg
