#include "nlmeans/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlm {

double mse(const ImageGrid& a, const ImageGrid& b) {
  if (a.side() != b.side()) throw std::invalid_argument("mse: image sides differ");
  if (a.empty()) throw std::invalid_argument("mse: empty images");
  const int n = a.side();
  double acc = 0.0;
  for (int r = 0; r < n; ++r) {
    const double* pa = a.row_ptr(r);
    const double* pb = b.row_ptr(r);
    for (int c = 0; c < n; ++c) {
      const double d = pa[c] - pb[c];
      acc += d * d;
    }
  }
  return acc / static_cast<double>(a.pixel_count());
}

double psnr_from_mse(double mse_value) {
  if (mse_value < 0.0) throw std::invalid_argument("mse must be non-negative");
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

double psnr(const ImageGrid& a, const ImageGrid& b) { return psnr_from_mse(mse(a, b)); }

QualityReport quality(const ImageGrid& reference, const ImageGrid& estimate) {
  QualityReport q;
  q.mse = mse(reference, estimate);
  q.psnr_db = psnr_from_mse(q.mse);
  q.pixel_count = reference.pixel_count();
  return q;
}

}  // namespace nlm
