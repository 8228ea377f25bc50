#pragma once

#include "nlmeans/image.hpp"
#include "nlmeans/kernels.hpp"
#include "nlmeans/weights.hpp"

namespace nlm {

struct DenoiseParams {
  int window_radius = 1;   // search window side = 2*window_radius + 1
  int patch_radius = 0;    // patch side = 2*patch_radius + 1
  double bandwidth = 1.0;  // H in exp(-d^2 / H^2)
  KernelSpec kernel = KernelSpec::k0();
  double sigma = 0.0;      // noise level; used by the split variant only

  int window_side() const { return 2 * window_radius + 1; }
  int patch_side() const { return 2 * patch_radius + 1; }
};

// Patch-based filter state for one image: the mirrored pad and the kernel
// table are built once, estimates are then independent per pixel.
//
// Weights at x0 follow the kernel-weighted patch distances
//   w(x) proportional to exp(-d^2(x, x0) / H^2)
// over the mirrored window, except that the center does not use its own zero
// distance: it is assigned the maximum distance among the other window
// slots, which caps the self-weight at the largest competing weight.
// Distances are used raw (no noise debiasing).
class NlmFilter {
 public:
  NlmFilter(const ImageGrid& y, const DenoiseParams& params);

  WeightMap weights(PixelCoord x0) const;
  double estimate(PixelCoord x0) const;
  ImageGrid denoise() const;

  const DenoiseParams& params() const { return params_; }

 private:
  // Fills `dist` with window distances (center slot = max of others) and
  // `values` with the mirrored window samples; returns the smallest distance.
  double window_distances(PixelCoord x0, std::vector<double>& dist,
                          std::vector<double>& values) const;

  DenoiseParams params_;
  MirrorPad pad_;
  KernelTable kernel_;
};

// Checkerboard-split filter state.  Both the candidate set and the evidence
// set are halves of the checkerboard relative to x0:
//   - candidates x run over window slots with (row delta + col delta) even,
//     x0 included;
//   - each candidate is scored by the split similarity, the unweighted mean
//     of squared differences over the odd-parity patch offsets minus
//     2*sigma^2 (the center scores -2*sigma^2 since its differences vanish);
//   - weights proportional to exp(-score / H^2), normalized over the even
//     half, average the noisy values of that half.
// Requires patch_radius >= 1.
class SplitFilter {
 public:
  SplitFilter(const ImageGrid& y, const DenoiseParams& params);

  double estimate(PixelCoord x0) const;
  ImageGrid denoise() const;

  const DenoiseParams& params() const { return params_; }

 private:
  DenoiseParams params_;
  MirrorPad pad_;
};

WeightMap nlm_weights(const ImageGrid& y, PixelCoord x0, const DenoiseParams& params);
ImageGrid nlm_denoise(const ImageGrid& y, const DenoiseParams& params);

double split_estimate(const ImageGrid& y, PixelCoord x0, const DenoiseParams& params);
ImageGrid split_denoise(const ImageGrid& y, const DenoiseParams& params);

}  // namespace nlm
