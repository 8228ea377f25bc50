#pragma once

#include <cstdint>

#include "nlmeans/nlm.hpp"

namespace nlm {

// Smoothness class of the clean image: |f(x) - f(y)| <= L * |x - y|_inf^beta
// on the unit square, 0 < beta <= 1.
struct HolderClass {
  double beta = 1.0;
  double L = 1.0;
};

// Window bandwidth (as a fraction of the unit square) balancing bias and
// variance for n observed pixels:
//   h = (sigma^2 / (4 beta L^2))^(1/(2 beta + 2)) * n^(-1/(2 beta + 2)).
// Callers convert to a pixel radius via round(h * side).
double theoretical_bandwidth(double sigma, const HolderClass& cls, std::int64_t n);

// Upper bound on the pointwise mean squared error at the bandwidth above:
//   2^((2 beta + 6)/(2 beta + 2)) * sigma^(4 beta/(2 beta + 2))
//     * L^(4/(2 beta + 2)) / beta^(2 beta/(2 beta + 2)) * n^(-2 beta/(2 beta + 2)).
// Decays at rate n^(-1/2) for beta = 1.
double theoretical_mse_bound(double sigma, const HolderClass& cls, std::int64_t n);

// Benchmark defaults as a function of the noise level (sigma > 0):
//   H          = 0.4 * sigma + 2
//   window side: the odd integer nearest 1.5 * sqrt(sigma) + 4.5 (ties up),
//                and at least 13 once sigma >= 15 (the setting the reference
//                measurements were taken at)
//   patch side = 17 below sigma 15, else 21
//   kernel     = k0
DenoiseParams practical_params(double sigma);

// Odd integer nearest x; exact midpoints (even integers) round up.
int nearest_odd(double x);

}  // namespace nlm
