#include "nlmeans/nlm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nlmeans/similarity.hpp"

namespace nlm {
namespace {

void validate_common(const ImageGrid& y, const DenoiseParams& p) {
  if (y.side() < 2) throw std::invalid_argument("image side must be >= 2");
  if (p.window_radius < 1) throw std::invalid_argument("window radius must be >= 1");
  if (p.window_radius > y.side() - 1) {
    throw std::invalid_argument("window radius must be smaller than the image side");
  }
  if (p.patch_radius < 0) throw std::invalid_argument("patch radius must be non-negative");
  if (p.patch_radius > y.side() - 1) {
    throw std::invalid_argument("patch radius must be smaller than the image side");
  }
  if (!(p.bandwidth > 0.0) || !std::isfinite(p.bandwidth)) {
    throw std::invalid_argument("bandwidth H must be positive");
  }
  if (p.sigma < 0.0) throw std::invalid_argument("sigma must be non-negative");
}

void check_pixel(PixelCoord x0, int side) {
  if (x0.row < 0 || x0.row >= side || x0.col < 0 || x0.col >= side) {
    throw std::invalid_argument("pixel out of bounds");
  }
}

}  // namespace

NlmFilter::NlmFilter(const ImageGrid& y, const DenoiseParams& params)
    : params_(params), pad_((validate_common(y, params), y), params.patch_radius),
      kernel_(params.kernel, params.patch_radius) {}

double NlmFilter::window_distances(PixelCoord x0, std::vector<double>& dist,
                                   std::vector<double>& values) const {
  const int n = pad_.side();
  const int wr = params_.window_radius;
  const int span = 2 * wr + 1;
  const std::size_t count = static_cast<std::size_t>(span) * span;
  const std::size_t center = count / 2;
  dist.resize(count);
  values.resize(count);

  double max_other = 0.0;
  std::size_t slot = 0;
  for (int dr = -wr; dr <= wr; ++dr) {
    const int row = reflect_index(x0.row + dr, n);
    for (int dc = -wr; dc <= wr; ++dc, ++slot) {
      const int col = reflect_index(x0.col + dc, n);
      values[slot] = pad_.at(row, col);
      if (slot == center) continue;
      const double d2 = patch_distance_sq(pad_, PixelCoord{row, col}, x0, kernel_);
      dist[slot] = d2;
      if (d2 > max_other) max_other = d2;
    }
  }
  dist[center] = max_other;

  double lo = dist[0];
  for (std::size_t i = 1; i < count; ++i) lo = std::min(lo, dist[i]);
  return lo;
}

WeightMap NlmFilter::weights(PixelCoord x0) const {
  check_pixel(x0, pad_.side());
  WeightMap map;
  map.center = x0;
  map.radius = params_.window_radius;
  std::vector<double> values;
  const double shift = window_distances(x0, map.weights, values);
  const double inv_h2 = 1.0 / (params_.bandwidth * params_.bandwidth);
  double total = 0.0;
  for (double& w : map.weights) {
    w = std::exp(-(w - shift) * inv_h2);
    total += w;
  }
  for (double& w : map.weights) w /= total;
  return map;
}

double NlmFilter::estimate(PixelCoord x0) const {
  check_pixel(x0, pad_.side());
  std::vector<double> dist;
  std::vector<double> values;
  const double shift = window_distances(x0, dist, values);
  // Deviation-from-center accumulation: well conditioned, and constant
  // shifts of the input pass through cleanly.
  const double y0 = pad_.at(x0.row, x0.col);
  const double inv_h2 = 1.0 / (params_.bandwidth * params_.bandwidth);
  double total = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double e = std::exp(-(dist[i] - shift) * inv_h2);
    total += e;
    acc += e * (values[i] - y0);
  }
  return y0 + acc / total;
}

ImageGrid NlmFilter::denoise() const {
  const int n = pad_.side();
  ImageGrid out(n);
  std::vector<double> dist;
  std::vector<double> values;
  const double inv_h2 = 1.0 / (params_.bandwidth * params_.bandwidth);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double shift = window_distances(PixelCoord{r, c}, dist, values);
      const double y0 = pad_.at(r, c);
      double total = 0.0;
      double acc = 0.0;
      for (std::size_t i = 0; i < dist.size(); ++i) {
        const double e = std::exp(-(dist[i] - shift) * inv_h2);
        total += e;
        acc += e * (values[i] - y0);
      }
      out.at(r, c) = y0 + acc / total;
    }
  }
  return out;
}

SplitFilter::SplitFilter(const ImageGrid& y, const DenoiseParams& params)
    : params_(params), pad_((validate_common(y, params), y), params.patch_radius) {
  if (params.patch_radius < 1) {
    throw std::invalid_argument("split filter requires patch radius >= 1");
  }
}

double SplitFilter::estimate(PixelCoord x0) const {
  check_pixel(x0, pad_.side());
  const int n = pad_.side();
  const int wr = params_.window_radius;

  // Even-parity window slots only; scores from the odd-parity patch pixels.
  std::vector<double> score;
  std::vector<double> values;
  double lo = std::numeric_limits<double>::infinity();
  for (int dr = -wr; dr <= wr; ++dr) {
    const int row = reflect_index(x0.row + dr, n);
    // (dr + dc) even iff dc has the parity of dr.
    const int start = ((dr % 2 == 0) == (wr % 2 == 0)) ? -wr : -wr + 1;
    for (int dc = start; dc <= wr; dc += 2) {
      const int col = reflect_index(x0.col + dc, n);
      const double s = split_similarity_sq(pad_, PixelCoord{row, col}, x0,
                                           params_.patch_radius, params_.sigma);
      score.push_back(s);
      values.push_back(pad_.at(row, col));
      if (s < lo) lo = s;
    }
  }
  const double y0 = pad_.at(x0.row, x0.col);
  const double inv_h2 = 1.0 / (params_.bandwidth * params_.bandwidth);
  double total = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < score.size(); ++i) {
    const double e = std::exp(-(score[i] - lo) * inv_h2);
    total += e;
    acc += e * (values[i] - y0);
  }
  return y0 + acc / total;
}

ImageGrid SplitFilter::denoise() const {
  const int n = pad_.side();
  ImageGrid out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.at(r, c) = estimate(PixelCoord{r, c});
  }
  return out;
}

WeightMap nlm_weights(const ImageGrid& y, PixelCoord x0, const DenoiseParams& params) {
  return NlmFilter(y, params).weights(x0);
}

ImageGrid nlm_denoise(const ImageGrid& y, const DenoiseParams& params) {
  return NlmFilter(y, params).denoise();
}

double split_estimate(const ImageGrid& y, PixelCoord x0, const DenoiseParams& params) {
  return SplitFilter(y, params).estimate(x0);
}

ImageGrid split_denoise(const ImageGrid& y, const DenoiseParams& params) {
  return SplitFilter(y, params).denoise();
}

}  // namespace nlm
