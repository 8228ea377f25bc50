#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "nlmeans/image.hpp"

namespace test {

// Independent mirror-reflection reference: fold i into [0, side) using the
// period-2(side-1) sawtooth.  Agrees with single reflection on every offset
// the library is specified for.
inline int fold_reflect(int i, int side) {
  const int period = 2 * (side - 1);
  int j = std::abs(i) % period;
  if (j >= side) j = period - j;
  return j;
}

inline double fold_at(const nlm::ImageGrid& img, int r, int c) {
  return img.at(fold_reflect(r, img.side()), fold_reflect(c, img.side()));
}

inline nlm::ImageGrid random_image(int side, std::uint64_t seed, double lo = 0.0,
                                   double hi = 255.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  nlm::ImageGrid img(side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) img.at(r, c) = dist(rng);
  return img;
}

inline nlm::ImageGrid random_integer_image(int side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  nlm::ImageGrid img(side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) img.at(r, c) = static_cast<double>(dist(rng));
  return img;
}

inline nlm::ImageGrid flip_horizontal(const nlm::ImageGrid& img) {
  const int n = img.side();
  nlm::ImageGrid out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = img.at(r, n - 1 - c);
  return out;
}

// Plain mean over the mirrored window, the H -> infinity limit of every
// weighting scheme here.
inline double box_mean(const nlm::ImageGrid& img, int row, int col, int radius) {
  double acc = 0.0;
  for (int dr = -radius; dr <= radius; ++dr)
    for (int dc = -radius; dc <= radius; ++dc) acc += fold_at(img, row + dr, col + dc);
  const int span = 2 * radius + 1;
  return acc / (span * span);
}

}  // namespace test
