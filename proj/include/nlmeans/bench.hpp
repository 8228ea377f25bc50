#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nlmeans/image.hpp"
#include "nlmeans/nlm.hpp"

namespace nlm {

// One benchmark measurement.  Field order is the CSV column order.
struct BenchRow {
  std::string image_id;
  int side = 0;
  double sigma = 0.0;
  int window_side = 0;
  int patch_side = 0;  // 0 for the pointwise oracle
  double H = 0.0;
  std::string kernel;  // "none" for the oracle
  std::string variant;
  std::uint64_t seed = 0;  // derived seed actually used for this row's noise
  double mse = 0.0;
  double psnr_db = 0.0;
  std::int64_t wall_ms = 0;
};

std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Smooth periodic test scene: 127.5 + (L / 2 pi) * (sin(2 pi u) + sin(2 pi v)) / 2
// sampled at cell centers.  Lipschitz with constant L in the sup norm on the
// unit square, so it is Holder(beta, L) for every beta <= 1.
ImageGrid synthetic_holder_image(int side, double L);

// Derived seeds: the i-th noise draw of a command uses seed + i.  Sweeps
// document which draw each row shares in their own terms below.

// Oracle quality as the window grows, one noisy image per sigma (rows of a
// sigma block share the draw; draw index = position of sigma in `sigmas`).
// H follows 0.4 * sigma + 2.
std::vector<BenchRow> bench_oracle_sweep(const ImageGrid& clean, const std::string& image_id,
                                         const std::vector<double>& sigmas,
                                         const std::vector<int>& window_sides,
                                         std::uint64_t seed);

// Patch-size sweep of the patch filter at fixed sigma, window and H, k0
// kernel, one shared noisy image (draw 0).
std::vector<BenchRow> bench_patch_sweep(const ImageGrid& clean, const std::string& image_id,
                                        double sigma, int window_side, double H,
                                        const std::vector<int>& patch_sides, std::uint64_t seed);

// Benchmark-default settings ("ours", practical_params) against the classic
// parameterization ("baseline", window 21, patch 9, same H rule, k0), two
// rows per (image, sigma); draw index = image index * len(sigmas) + sigma
// index.
std::vector<BenchRow> bench_table2(const std::vector<std::pair<std::string, ImageGrid>>& cleans,
                                   const std::vector<double>& sigmas, std::uint64_t seed);

enum class RateVariant { kOracle, kSplit };

struct RateResult {
  double beta = 1.0;
  double L = 1.0;
  double sigma = 0.0;
  RateVariant variant = RateVariant::kOracle;
  std::vector<int> sides;
  std::vector<double> mean_mse;   // per side, averaged over reps
  std::vector<int> window_radius; // realized pixel radius per side
  double slope = 0.0;             // least-squares slope of log mse vs log n
};

// Empirical convergence rate on the synthetic scene.  Per side the window
// radius is round(h * side) with h from theoretical_bandwidth (floor 1), the
// squared error is averaged over the central quarter of the grid (keeping
// clear of the mirrored borders) and over `reps` independent noise draws
// (draw index = side index * reps + rep).  Needs >= 2 sides and reps >= 10.
RateResult rate_check(double beta, double L, double sigma, const std::vector<int>& sides,
                      int reps, RateVariant variant, std::uint64_t seed);

std::string rate_csv(const RateResult& result);

double fit_loglog_slope(const std::vector<double>& n_values, const std::vector<double>& mse_values);

}  // namespace nlm
