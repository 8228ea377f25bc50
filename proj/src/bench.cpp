#include "nlmeans/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nlmeans/metrics.hpp"
#include "nlmeans/noise.hpp"
#include "nlmeans/oracle.hpp"
#include "nlmeans/params.hpp"

namespace nlm {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string format_double(const char* fmt, double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

int checked_odd_side(int side, const char* what) {
  if (side < 3 || side % 2 == 0) {
    throw std::invalid_argument(std::string(what) + " must be odd and >= 3");
  }
  return side;
}

}  // namespace

std::string bench_csv_header() {
  return "image_id,side,sigma,window_side,patch_side,H,kernel,variant,seed,mse,psnr_db,wall_ms";
}

std::string bench_csv_line(const BenchRow& row) {
  std::ostringstream out;
  out << row.image_id << ',' << row.side << ',' << format_double("%g", row.sigma) << ','
      << row.window_side << ',' << row.patch_side << ',' << format_double("%g", row.H) << ','
      << row.kernel << ',' << row.variant << ',' << row.seed << ','
      << format_double("%.12g", row.mse) << ',' << format_double("%.2f", row.psnr_db) << ','
      << row.wall_ms;
  return out.str();
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << bench_csv_header() << '\n';
  for (const BenchRow& row : rows) out << bench_csv_line(row) << '\n';
}

ImageGrid synthetic_holder_image(int side, double L) {
  if (side < 2) throw std::invalid_argument("side must be >= 2");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("L must be positive");
  const double amplitude = L / (2.0 * std::numbers::pi);
  ImageGrid img(side);
  for (int r = 0; r < side; ++r) {
    const double v = (r + 0.5) / side;
    const double sv = std::sin(2.0 * std::numbers::pi * v);
    double* row = img.row_ptr(r);
    for (int c = 0; c < side; ++c) {
      const double u = (c + 0.5) / side;
      row[c] = 127.5 + amplitude * (std::sin(2.0 * std::numbers::pi * u) + sv) / 2.0;
    }
  }
  return img;
}

std::vector<BenchRow> bench_oracle_sweep(const ImageGrid& clean, const std::string& image_id,
                                         const std::vector<double>& sigmas,
                                         const std::vector<int>& window_sides,
                                         std::uint64_t seed) {
  if (sigmas.empty() || window_sides.empty()) {
    throw std::invalid_argument("oracle sweep needs at least one sigma and one window side");
  }
  std::vector<BenchRow> rows;
  for (std::size_t si = 0; si < sigmas.size(); ++si) {
    const double sigma = sigmas[si];
    const std::uint64_t draw_seed = seed + si;
    const ImageGrid noisy = add_gaussian_noise(clean, {sigma, draw_seed});
    const double H = 0.4 * sigma + 2.0;
    for (int side : window_sides) {
      checked_odd_side(side, "window side");
      const auto start = Clock::now();
      const ImageGrid out = oracle_denoise(clean, noisy, (side - 1) / 2, H);
      BenchRow row;
      row.image_id = image_id;
      row.side = clean.side();
      row.sigma = sigma;
      row.window_side = side;
      row.patch_side = 0;
      row.H = H;
      row.kernel = "none";
      row.variant = "oracle";
      row.seed = draw_seed;
      row.mse = mse(clean, out);
      row.psnr_db = psnr_from_mse(row.mse);
      row.wall_ms = elapsed_ms(start);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<BenchRow> bench_patch_sweep(const ImageGrid& clean, const std::string& image_id,
                                        double sigma, int window_side, double H,
                                        const std::vector<int>& patch_sides, std::uint64_t seed) {
  if (patch_sides.empty()) throw std::invalid_argument("patch sweep needs at least one patch side");
  checked_odd_side(window_side, "window side");
  const ImageGrid noisy = add_gaussian_noise(clean, {sigma, seed});
  std::vector<BenchRow> rows;
  for (int side : patch_sides) {
    checked_odd_side(side, "patch side");
    DenoiseParams p;
    p.window_radius = (window_side - 1) / 2;
    p.patch_radius = (side - 1) / 2;
    p.bandwidth = H;
    p.kernel = KernelSpec::k0();
    p.sigma = sigma;
    const auto start = Clock::now();
    const ImageGrid out = nlm_denoise(noisy, p);
    BenchRow row;
    row.image_id = image_id;
    row.side = clean.side();
    row.sigma = sigma;
    row.window_side = window_side;
    row.patch_side = side;
    row.H = H;
    row.kernel = "k0";
    row.variant = "nlm";
    row.seed = seed;
    row.mse = mse(clean, out);
    row.psnr_db = psnr_from_mse(row.mse);
    row.wall_ms = elapsed_ms(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BenchRow> bench_table2(const std::vector<std::pair<std::string, ImageGrid>>& cleans,
                                   const std::vector<double>& sigmas, std::uint64_t seed) {
  if (cleans.empty() || sigmas.empty()) {
    throw std::invalid_argument("table2 needs at least one image and one sigma");
  }
  std::vector<BenchRow> rows;
  for (std::size_t ii = 0; ii < cleans.size(); ++ii) {
    const auto& [image_id, clean] = cleans[ii];
    for (std::size_t si = 0; si < sigmas.size(); ++si) {
      const double sigma = sigmas[si];
      const std::uint64_t draw_seed = seed + ii * sigmas.size() + si;
      const ImageGrid noisy = add_gaussian_noise(clean, {sigma, draw_seed});

      DenoiseParams ours = practical_params(sigma);
      DenoiseParams baseline;
      baseline.window_radius = 10;  // 21x21 search window
      baseline.patch_radius = 4;    // 9x9 patches
      baseline.bandwidth = ours.bandwidth;
      baseline.kernel = KernelSpec::k0();
      baseline.sigma = sigma;

      for (const auto& [variant, params] : {std::pair<const char*, DenoiseParams>{"ours", ours},
                                            {"baseline", baseline}}) {
        const auto start = Clock::now();
        const ImageGrid out = nlm_denoise(noisy, params);
        BenchRow row;
        row.image_id = image_id;
        row.side = clean.side();
        row.sigma = sigma;
        row.window_side = params.window_side();
        row.patch_side = params.patch_side();
        row.H = params.bandwidth;
        row.kernel = "k0";
        row.variant = variant;
        row.seed = draw_seed;
        row.mse = mse(clean, out);
        row.psnr_db = psnr_from_mse(row.mse);
        row.wall_ms = elapsed_ms(start);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

double fit_loglog_slope(const std::vector<double>& n_values, const std::vector<double>& mse_values) {
  if (n_values.size() != mse_values.size() || n_values.size() < 2) {
    throw std::invalid_argument("slope fit needs >= 2 matching points");
  }
  const std::size_t m = n_values.size();
  std::vector<double> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(n_values[i] > 0.0) || !(mse_values[i] > 0.0)) {
      throw std::invalid_argument("slope fit needs positive values");
    }
    x[i] = std::log(n_values[i]);
    y[i] = std::log(mse_values[i]);
  }
  double xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= m;
  ybar /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs at least two distinct n");
  return sxy / sxx;
}

RateResult rate_check(double beta, double L, double sigma, const std::vector<int>& sides,
                      int reps, RateVariant variant, std::uint64_t seed) {
  if (sides.size() < 2) throw std::invalid_argument("rate check needs at least two sides");
  if (reps < 10) throw std::invalid_argument("rate check needs reps >= 10");
  if (!(beta > 0.0) || beta > 1.0) throw std::invalid_argument("beta must be in (0, 1]");
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");

  RateResult result;
  result.beta = beta;
  result.L = L;
  result.sigma = sigma;
  result.variant = variant;
  result.sides = sides;

  const HolderClass cls{beta, L};
  for (std::size_t si = 0; si < sides.size(); ++si) {
    const int n_side = sides[si];
    if (n_side < 8) throw std::invalid_argument("rate check sides must be >= 8");
    const std::int64_t n = static_cast<std::int64_t>(n_side) * n_side;
    const ImageGrid clean = synthetic_holder_image(n_side, L);

    const double h = sigma > 0.0 ? theoretical_bandwidth(sigma, cls, n) : 0.0;
    const int k = std::max(1, static_cast<int>(std::lround(h * n_side)));
    const double h_pix = static_cast<double>(k) / n_side;
    // The bandwidth must dominate the largest clean-image gap inside the
    // window, sqrt(2) L h^beta, measured at the realized (rounded) pixel
    // radius so the weights average rather than select.
    double H = std::numbers::sqrt2 * L * std::pow(h_pix, beta);

    DenoiseParams split_params;
    if (variant == RateVariant::kSplit) {
      // Patch radius grows like sqrt(side): eta = c0 * n^(-1/4) with
      // c0 = 0.125, inside the admissible alpha range (0, 1/2) for beta = 1.
      const int p = std::max(1, static_cast<int>(std::lround(0.125 * std::sqrt(n_side))));
      const int card_odd_half = 2 * p * (p + 1);
      // Similarity scores fluctuate by about 2 sqrt(2) sigma^2 / sqrt(m);
      // keep that fluctuation a fixed fraction of H^2 so the weight profile
      // stays n-invariant instead of locking onto score noise.
      const double sim_noise = 2.0 * std::numbers::sqrt2 * sigma * sigma / std::sqrt(card_odd_half);
      H = std::max(H, std::sqrt(4.0 * sim_noise));
      split_params.window_radius = k;
      split_params.patch_radius = p;
      split_params.bandwidth = H;
      split_params.kernel = KernelSpec::rect();
      split_params.sigma = sigma;
    }

    const int r0 = n_side / 4;
    const int r1 = n_side - n_side / 4;
    const std::int64_t region_count =
        static_cast<std::int64_t>(r1 - r0) * (r1 - r0);

    double mse_sum = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t draw_seed = seed + si * static_cast<std::size_t>(reps) + rep;
      const ImageGrid noisy = add_gaussian_noise(clean, {sigma, draw_seed});
      double acc = 0.0;
      if (variant == RateVariant::kOracle) {
        for (int r = r0; r < r1; ++r) {
          for (int c = r0; c < r1; ++c) {
            const double err = oracle_estimate(clean, noisy, PixelCoord{r, c}, k, H) - clean.at(r, c);
            acc += err * err;
          }
        }
      } else {
        const SplitFilter filter(noisy, split_params);
        for (int r = r0; r < r1; ++r) {
          for (int c = r0; c < r1; ++c) {
            const double err = filter.estimate(PixelCoord{r, c}) - clean.at(r, c);
            acc += err * err;
          }
        }
      }
      mse_sum += acc / static_cast<double>(region_count);
    }
    result.mean_mse.push_back(mse_sum / reps);
    result.window_radius.push_back(k);
  }

  std::vector<double> n_values;
  for (int side : sides) n_values.push_back(static_cast<double>(side) * side);
  result.slope = fit_loglog_slope(n_values, result.mean_mse);
  return result;
}

std::string rate_csv(const RateResult& result) {
  std::ostringstream out;
  out << "beta,variant,side,n,window_radius,mean_mse,fitted_slope\n";
  const char* variant = result.variant == RateVariant::kOracle ? "oracle" : "split";
  for (std::size_t i = 0; i < result.sides.size(); ++i) {
    const std::int64_t n = static_cast<std::int64_t>(result.sides[i]) * result.sides[i];
    out << format_double("%g", result.beta) << ',' << variant << ',' << result.sides[i] << ',' << n
        << ',' << result.window_radius[i] << ',' << format_double("%.12g", result.mean_mse[i])
        << ',' << format_double("%.6f", result.slope) << '\n';
  }
  return out.str();
}

}  // namespace nlm
