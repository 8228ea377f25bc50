#pragma once

#include <cstdint>

#include "nlmeans/image.hpp"

namespace nlm {

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;
  std::int64_t pixel_count = 0;
};

// Mean squared difference over all pixels, on the raw double intensities
// (no clamping or quantization).  Images must have the same side.
double mse(const ImageGrid& a, const ImageGrid& b);

// 10 * log10(255^2 / mse); +infinity when the images are identical.
double psnr_from_mse(double mse_value);
double psnr(const ImageGrid& a, const ImageGrid& b);

QualityReport quality(const ImageGrid& reference, const ImageGrid& estimate);

}  // namespace nlm
