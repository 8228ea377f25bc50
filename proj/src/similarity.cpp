#include "nlmeans/similarity.hpp"

#include <stdexcept>

namespace nlm {
namespace {

void check_center(const char* what, PixelCoord p, int side) {
  if (p.row < 0 || p.row >= side || p.col < 0 || p.col >= side) {
    throw std::invalid_argument(std::string(what) + " out of bounds");
  }
}

}  // namespace

double patch_distance_sq(const MirrorPad& y, PixelCoord x, PixelCoord x0,
                         const KernelTable& kernel) {
  const int pr = kernel.radius();
  if (pr > y.pad()) throw std::invalid_argument("pad smaller than patch radius");
  check_center("patch center", x, y.side());
  check_center("patch center", x0, y.side());

  const int span = 2 * pr + 1;
  double acc = 0.0;
  for (int di = -pr; di <= pr; ++di) {
    const double* a = y.row_ptr(x.row + di) + (x.col - pr);
    const double* b = y.row_ptr(x0.row + di) + (x0.col - pr);
    const double* k = kernel.row_ptr(di);
    for (int t = 0; t < span; ++t) {
      const double d = a[t] - b[t];
      acc += k[t] * d * d;
    }
  }
  return acc / kernel.sum();
}

double patch_distance_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                         const KernelSpec& spec) {
  const MirrorPad pad(y, patch_radius);
  const KernelTable kernel(spec, patch_radius);
  return patch_distance_sq(pad, x, x0, kernel);
}

double estimated_similarity_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                               const KernelSpec& spec, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
  return patch_distance_sq(y, x, x0, patch_radius, spec) - 2.0 * sigma * sigma;
}

double split_similarity_sq(const MirrorPad& y, PixelCoord x, PixelCoord x0, int patch_radius,
                           double sigma) {
  if (patch_radius < 1) {
    throw std::invalid_argument("split similarity requires patch radius >= 1");
  }
  if (patch_radius > y.pad()) throw std::invalid_argument("pad smaller than patch radius");
  if (sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
  check_center("patch center", x, y.side());
  check_center("patch center", x0, y.side());

  double acc = 0.0;
  int count = 0;
  for (int di = -patch_radius; di <= patch_radius; ++di) {
    const double* a = y.row_ptr(x.row + di) + x.col;
    const double* b = y.row_ptr(x0.row + di) + x0.col;
    // Offsets with (di + dj) odd form the half not containing the center.
    const int start = (di % 2 == 0) ? -patch_radius + ((patch_radius % 2 == 0) ? 1 : 0)
                                    : -patch_radius + ((patch_radius % 2 == 0) ? 0 : 1);
    for (int dj = start; dj <= patch_radius; dj += 2) {
      const double d = a[dj] - b[dj];
      acc += d * d;
      ++count;
    }
  }
  return acc / count - 2.0 * sigma * sigma;
}

double split_similarity_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                           double sigma) {
  const MirrorPad pad(y, patch_radius);
  return split_similarity_sq(pad, x, x0, patch_radius, sigma);
}

}  // namespace nlm
