#include "nlmeans/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlm {

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit_open();
  const double u2 = next_unit_open();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

ImageGrid add_gaussian_noise(const ImageGrid& img, const NoiseSpec& spec) {
  if (spec.sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
  if (!std::isfinite(spec.sigma)) throw std::invalid_argument("sigma must be finite");
  if (spec.sigma == 0.0) return img;

  ImageGrid out(img.side());
  GaussianStream g(spec.seed);
  const int n = img.side();
  for (int r = 0; r < n; ++r) {
    const double* src = img.row_ptr(r);
    double* dst = out.row_ptr(r);
    for (int c = 0; c < n; ++c) dst[c] = src[c] + spec.sigma * g.next();
  }
  return out;
}

}  // namespace nlm
