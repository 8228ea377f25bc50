#include "nlmeans/params.hpp"

#include <cmath>
#include <stdexcept>

namespace nlm {
namespace {

void check_class(double sigma, const HolderClass& cls, std::int64_t n) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be positive");
  if (!(cls.beta > 0.0) || cls.beta > 1.0) throw std::invalid_argument("beta must be in (0, 1]");
  if (!(cls.L > 0.0) || !std::isfinite(cls.L)) throw std::invalid_argument("L must be positive");
  if (n < 1) throw std::invalid_argument("n must be positive");
}

}  // namespace

double theoretical_bandwidth(double sigma, const HolderClass& cls, std::int64_t n) {
  check_class(sigma, cls, n);
  const double expo = 1.0 / (2.0 * cls.beta + 2.0);
  const double c = sigma * sigma / (4.0 * cls.beta * cls.L * cls.L);
  return std::pow(c, expo) * std::pow(static_cast<double>(n), -expo);
}

double theoretical_mse_bound(double sigma, const HolderClass& cls, std::int64_t n) {
  check_class(sigma, cls, n);
  const double b = cls.beta;
  const double denom = 2.0 * b + 2.0;
  return std::pow(2.0, (2.0 * b + 6.0) / denom) * std::pow(sigma, 4.0 * b / denom) *
         std::pow(cls.L, 4.0 / denom) / std::pow(b, 2.0 * b / denom) *
         std::pow(static_cast<double>(n), -2.0 * b / denom);
}

int nearest_odd(double x) {
  // Odd integers are 2k+1; round (x-1)/2 half-up to get k.
  const double k = std::floor((x - 1.0) / 2.0 + 0.5);
  return 2 * static_cast<int>(k) + 1;
}

DenoiseParams practical_params(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be positive");

  DenoiseParams p;
  p.bandwidth = 0.4 * sigma + 2.0;
  int window_side = nearest_odd(1.5 * std::sqrt(sigma) + 4.5);
  if (sigma >= 15.0 && window_side < 13) window_side = 13;
  const int patch_side = sigma < 15.0 ? 17 : 21;
  p.window_radius = (window_side - 1) / 2;
  p.patch_radius = (patch_side - 1) / 2;
  p.kernel = KernelSpec::k0();
  p.sigma = sigma;
  return p;
}

}  // namespace nlm
