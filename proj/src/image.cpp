#include "nlmeans/image.hpp"

#include <cmath>
#include <string>

namespace nlm {

ImageGrid::ImageGrid(int side, double fill) {
  if (side < 0) throw std::invalid_argument("image side must be non-negative");
  side_ = side;
  values_.assign(static_cast<std::size_t>(side) * side, fill);
}

ImageGrid::ImageGrid(int side, std::vector<double> values) {
  if (side < 0) throw std::invalid_argument("image side must be non-negative");
  const auto expected = static_cast<std::size_t>(side) * side;
  if (values.size() != expected) {
    throw std::invalid_argument("image buffer has " + std::to_string(values.size()) +
                                " values, expected " + std::to_string(expected));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("image values must be finite");
  }
  side_ = side;
  values_ = std::move(values);
}

int reflect_index(int i, int side) {
  if (side < 2) throw std::invalid_argument("reflect_index requires side >= 2");
  if (i <= -2 * side || i >= 2 * side) {
    throw std::invalid_argument("reflect_index offset out of range: " + std::to_string(i));
  }
  if (i < 0) return -i;
  if (i >= side) return 2 * (side - 1) - i;
  return i;
}

PatchVector extract_patch(const ImageGrid& img, PixelCoord center, int radius) {
  if (radius < 0) throw std::invalid_argument("patch radius must be non-negative");
  if (!img.in_bounds(center)) throw std::invalid_argument("patch center out of bounds");

  const int n = img.side();
  const int span = 2 * radius + 1;
  PatchVector patch;
  patch.radius = radius;
  patch.values.reserve(static_cast<std::size_t>(span) * span);
  for (int dr = -radius; dr <= radius; ++dr) {
    const int row = reflect_index(center.row + dr, n);
    for (int dc = -radius; dc <= radius; ++dc) {
      patch.values.push_back(img.at(row, reflect_index(center.col + dc, n)));
    }
  }
  return patch;
}

MirrorPad::MirrorPad(const ImageGrid& img, int pad) {
  if (pad < 0) throw std::invalid_argument("pad must be non-negative");
  if (img.side() < 2) throw std::invalid_argument("MirrorPad requires side >= 2");
  if (pad > img.side() - 1) {
    // Single reflection covers offsets up to side-1 on each edge.
    throw std::invalid_argument("pad exceeds side-1");
  }
  side_ = img.side();
  pad_ = pad;
  stride_ = side_ + 2 * pad;
  data_.resize(static_cast<std::size_t>(stride_) * stride_);
  for (int r = -pad; r < side_ + pad; ++r) {
    const int src_row = reflect_index(r, side_);
    double* dst = data_.data() + static_cast<std::size_t>(r + pad_) * stride_;
    for (int c = -pad; c < side_ + pad; ++c) {
      dst[c + pad_] = img.at(src_row, reflect_index(c, side_));
    }
  }
}

}  // namespace nlm
