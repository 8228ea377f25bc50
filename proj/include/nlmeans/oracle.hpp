#pragma once

#include "nlmeans/image.hpp"
#include "nlmeans/weights.hpp"

namespace nlm {

// Reference estimator built from the clean image: window weights follow the
// pointwise intensity gap to the center,
//   w(x) proportional to exp(-(f(x) - f(x0))^2 / H^2),
// normalized over the mirrored window.  No patches are involved.
WeightMap oracle_weights(const ImageGrid& clean, PixelCoord x0, int window_radius, double H);

// Applies the oracle weights of `clean` at x0 to the noisy pixels of `noisy`.
double oracle_estimate(const ImageGrid& clean, const ImageGrid& noisy, PixelCoord x0,
                       int window_radius, double H);

ImageGrid oracle_denoise(const ImageGrid& clean, const ImageGrid& noisy, int window_radius,
                         double H);

}  // namespace nlm
