#pragma once

#include <vector>

#include "nlmeans/image.hpp"

namespace nlm {

// Normalized weights over a square search window, row-major over window
// offsets.  Entries are non-negative and sum to 1 (up to roundoff); window
// slots that mirror outside the image keep their own entry.
struct WeightMap {
  PixelCoord center;
  int radius = 0;
  std::vector<double> weights;  // (2*radius+1)^2 entries

  int span() const { return 2 * radius + 1; }
  double at(int dr, int dc) const {
    return weights[static_cast<std::size_t>(dr + radius) * span() + (dc + radius)];
  }
};

}  // namespace nlm
