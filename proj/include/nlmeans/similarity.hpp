#pragma once

#include "nlmeans/image.hpp"
#include "nlmeans/kernels.hpp"

namespace nlm {

// Kernel-weighted squared distance between the patches centered at x and x0:
//   sum_o k(o) * (Y(x+o) - Y(x0+o))^2 / sum_o k(o),
// offsets o running row-major over the patch, borders mirrored.  With the
// rect kernel this is the plain mean of squared differences.  Both centers
// must be in bounds.
double patch_distance_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                         const KernelSpec& spec);

// Same computation against a prebuilt pad (pad() >= patch radius) and kernel
// table; this is the form the filters call in inner loops.
double patch_distance_sq(const MirrorPad& y, PixelCoord x, PixelCoord x0,
                         const KernelTable& kernel);

// Patch distance debiased by the noise level: d^2 - 2*sigma^2.  Estimates
// the squared intensity gap (f(x) - f(x0))^2; may be negative.
double estimated_similarity_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                               const KernelSpec& spec, double sigma);

// Checkerboard variant: the mean runs over the patch offsets of the half NOT
// containing the centers ((row delta + col delta) odd), unweighted, then
// subtracts 2*sigma^2.  Requires patch_radius >= 1 (the odd half of a radius
// 0 patch is empty).
double split_similarity_sq(const ImageGrid& y, PixelCoord x, PixelCoord x0, int patch_radius,
                           double sigma);
double split_similarity_sq(const MirrorPad& y, PixelCoord x, PixelCoord x0, int patch_radius,
                           double sigma);

}  // namespace nlm
