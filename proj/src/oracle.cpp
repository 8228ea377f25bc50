#include "nlmeans/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nlm {
namespace {

void validate(const ImageGrid& clean, PixelCoord x0, int window_radius, double H) {
  if (clean.side() < 2) throw std::invalid_argument("image side must be >= 2");
  if (!clean.in_bounds(x0)) throw std::invalid_argument("window center out of bounds");
  if (window_radius < 1) throw std::invalid_argument("window radius must be >= 1");
  if (window_radius > clean.side() - 1) {
    throw std::invalid_argument("window radius must be smaller than the image side");
  }
  if (!(H > 0.0) || !std::isfinite(H)) throw std::invalid_argument("H must be positive");
}

// Squared intensity gaps to the center over the mirrored window, row-major
// over offsets.  Returns the smallest gap; subtracting it before
// exponentiating leaves the normalized weights unchanged and keeps the
// largest mass at exactly 1.
double center_gaps_sq(const ImageGrid& clean, PixelCoord x0, int wr, std::vector<double>& out) {
  const int n = clean.side();
  const double f0 = clean.at(x0);
  out.clear();
  double lo = std::numeric_limits<double>::infinity();
  for (int dr = -wr; dr <= wr; ++dr) {
    const double* row = clean.row_ptr(reflect_index(x0.row + dr, n));
    for (int dc = -wr; dc <= wr; ++dc) {
      const double gap = row[reflect_index(x0.col + dc, n)] - f0;
      const double g2 = gap * gap;
      out.push_back(g2);
      if (g2 < lo) lo = g2;
    }
  }
  return lo;
}

}  // namespace

WeightMap oracle_weights(const ImageGrid& clean, PixelCoord x0, int window_radius, double H) {
  validate(clean, x0, window_radius, H);
  WeightMap map;
  map.center = x0;
  map.radius = window_radius;
  const double shift = center_gaps_sq(clean, x0, window_radius, map.weights);
  const double inv_h2 = 1.0 / (H * H);
  double total = 0.0;
  for (double& w : map.weights) {
    w = std::exp(-(w - shift) * inv_h2);
    total += w;
  }
  for (double& w : map.weights) w /= total;
  return map;
}

double oracle_estimate(const ImageGrid& clean, const ImageGrid& noisy, PixelCoord x0,
                       int window_radius, double H) {
  validate(clean, x0, window_radius, H);
  if (noisy.side() != clean.side()) {
    throw std::invalid_argument("clean and noisy images must have the same side");
  }
  std::vector<double> gaps;
  const double shift = center_gaps_sq(clean, x0, window_radius, gaps);
  const double inv_h2 = 1.0 / (H * H);
  const int n = clean.side();
  // Accumulating deviations from the center value keeps the estimate well
  // conditioned and makes constant shifts of the input pass through cleanly.
  const double y0 = noisy.at(x0);
  double total = 0.0;
  double acc = 0.0;
  std::size_t slot = 0;
  for (int dr = -window_radius; dr <= window_radius; ++dr) {
    const double* row = noisy.row_ptr(reflect_index(x0.row + dr, n));
    for (int dc = -window_radius; dc <= window_radius; ++dc, ++slot) {
      const double e = std::exp(-(gaps[slot] - shift) * inv_h2);
      total += e;
      acc += e * (row[reflect_index(x0.col + dc, n)] - y0);
    }
  }
  return y0 + acc / total;
}

ImageGrid oracle_denoise(const ImageGrid& clean, const ImageGrid& noisy, int window_radius,
                         double H) {
  validate(clean, PixelCoord{0, 0}, window_radius, H);
  if (noisy.side() != clean.side()) {
    throw std::invalid_argument("clean and noisy images must have the same side");
  }
  const int n = clean.side();
  ImageGrid out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out.at(r, c) = oracle_estimate(clean, noisy, PixelCoord{r, c}, window_radius, H);
    }
  }
  return out;
}

}  // namespace nlm
