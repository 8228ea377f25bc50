#pragma once

#include <cstdint>
#include <random>

#include "nlmeans/image.hpp"

namespace nlm {

struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

// Standard normal stream with a fixed, portable construction: mt19937_64
// drives 53-bit uniforms mapped to (0,1), transformed by the basic
// Box-Muller formula.  The sequence depends only on the seed.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next();

  double next_unit_open() {
    // (k + 0.5) * 2^-53 for k in [0, 2^53): strictly inside (0, 1).
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1p-53;
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Y = f + sigma * e, e i.i.d. standard normal, drawn in row-major pixel
// order from a single stream.  sigma = 0 returns the input unchanged and
// draws nothing.  Output is not clamped.
ImageGrid add_gaussian_noise(const ImageGrid& img, const NoiseSpec& spec);

}  // namespace nlm
