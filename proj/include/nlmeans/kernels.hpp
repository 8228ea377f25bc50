#pragma once

#include <string>
#include <vector>

namespace nlm {

enum class KernelKind {
  kRect,      // constant 1 over the patch
  kGaussian,  // exp(-(di^2 + dj^2) / (2 * bandwidth))
  kK0,        // truncated harmonic rings, the benchmark default
};

struct KernelSpec {
  KernelKind kind = KernelKind::kK0;
  double bandwidth = 0.0;  // Gaussian only; must be > 0 there

  static KernelSpec rect() { return {KernelKind::kRect, 0.0}; }
  static KernelSpec gaussian(double bandwidth) { return {KernelKind::kGaussian, bandwidth}; }
  static KernelSpec k0() { return {KernelKind::kK0, 0.0}; }
};

// Weight at patch offset (di, dj) for a patch of the given radius.
// The K0 kernel depends on the offset only through j = max(|di|, |dj|):
//   sum over k = max(1, j) .. radius of 1 / (2k+1)^2
// and is defined as 1 for radius 0.  Offsets outside the patch are an error.
double kernel_weight(const KernelSpec& spec, int di, int dj, int patch_radius);

// Dense (2r+1)^2 table of kernel weights plus their sum, evaluated once so
// filters never recompute per-offset weights in inner loops.
class KernelTable {
 public:
  KernelTable(const KernelSpec& spec, int patch_radius);

  int radius() const { return radius_; }
  double sum() const { return sum_; }
  double at(int di, int dj) const {
    return weights_[static_cast<std::size_t>(di + radius_) * (2 * radius_ + 1) + (dj + radius_)];
  }
  // Pointer to offset (di, -radius) of the table row.
  const double* row_ptr(int di) const {
    return weights_.data() + static_cast<std::size_t>(di + radius_) * (2 * radius_ + 1);
  }

 private:
  int radius_ = 0;
  double sum_ = 0.0;
  std::vector<double> weights_;
};

// "rect", "gauss:<bandwidth>" or "k0"; used by the CLI and bench CSV.
std::string kernel_name(const KernelSpec& spec);
KernelSpec parse_kernel(const std::string& text);

}  // namespace nlm
