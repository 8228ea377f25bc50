#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nlm {

struct PixelCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Square grayscale image, double intensities, row-major storage.
// Values are arbitrary finite reals; quantization happens only at PGM export.
class ImageGrid {
 public:
  ImageGrid() = default;

  explicit ImageGrid(int side, double fill = 0.0);

  // Takes ownership of a full row-major value buffer; validates size and
  // finiteness.
  ImageGrid(int side, std::vector<double> values);

  int side() const { return side_; }
  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(side_) * side_;
  }
  bool empty() const { return side_ == 0; }

  double at(int row, int col) const { return values_[idx(row, col)]; }
  double& at(int row, int col) { return values_[idx(row, col)]; }
  double at(PixelCoord p) const { return at(p.row, p.col); }

  bool in_bounds(PixelCoord p) const {
    return p.row >= 0 && p.row < side_ && p.col >= 0 && p.col < side_;
  }

  const std::vector<double>& values() const { return values_; }
  const double* row_ptr(int row) const { return values_.data() + static_cast<std::size_t>(row) * side_; }
  double* row_ptr(int row) { return values_.data() + static_cast<std::size_t>(row) * side_; }

 private:
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row) * side_ + col;
  }

  int side_ = 0;
  std::vector<double> values_;
};

// Patch sampled around a center, row-major over (row offset, col offset),
// (2*radius+1)^2 entries.
struct PatchVector {
  int radius = 0;
  std::vector<double> values;
};

enum class Parity {
  kPrime,        // (row delta + col delta) even; contains the reference pixel
  kDoublePrime,  // (row delta + col delta) odd
};

// Mirrors an index into [0, side) by reflecting about the border pixel
// without duplicating it: -1 -> 1, side -> side-2.  A single reflection is
// applied, which covers every offset the filters generate (|i| < 2*side).
int reflect_index(int i, int side);

// Patch of the image centered at `center` (must be in bounds), borders
// mirrored.  radius >= 0.
PatchVector extract_patch(const ImageGrid& img, PixelCoord center, int radius);

// Checkerboard half containing `x` relative to reference pixel `x0`.
inline Parity checkerboard_split(PixelCoord x0, PixelCoord x) {
  const int d = (x.row - x0.row) + (x.col - x0.col);
  return d % 2 == 0 ? Parity::kPrime : Parity::kDoublePrime;
}

// Read-only mirrored extension of an image: rows and cols may be addressed
// in [-pad, side+pad).  Built once per image so patch loops can run on
// contiguous rows without per-access reflection.
class MirrorPad {
 public:
  MirrorPad(const ImageGrid& img, int pad);

  int side() const { return side_; }
  int pad() const { return pad_; }

  // row/col in padded coordinates, i.e. [-pad, side+pad).
  double at(int row, int col) const {
    return data_[static_cast<std::size_t>(row + pad_) * stride_ + (col + pad_)];
  }
  // Pointer positioned at column 0 of a padded row; may be offset by
  // [-pad, side+pad).
  const double* row_ptr(int row) const {
    return data_.data() + static_cast<std::size_t>(row + pad_) * stride_ + pad_;
  }

 private:
  int side_ = 0;
  int pad_ = 0;
  int stride_ = 0;
  std::vector<double> data_;
};

}  // namespace nlm
