#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "nlmeans/image.hpp"
#include "nlmeans/noise.hpp"

using nlm::ImageGrid;

TEST_CASE("same seed gives bit-identical noise, different seed does not") {
  const ImageGrid clean = test::random_image(16, 5);
  const ImageGrid a = nlm::add_gaussian_noise(clean, {20.0, 42});
  const ImageGrid b = nlm::add_gaussian_noise(clean, {20.0, 42});
  const ImageGrid c = nlm::add_gaussian_noise(clean, {20.0, 43});
  int diff_ab = 0, diff_ac = 0;
  for (int r = 0; r < 16; ++r)
    for (int col = 0; col < 16; ++col) {
      if (a.at(r, col) != b.at(r, col)) ++diff_ab;
      if (a.at(r, col) != c.at(r, col)) ++diff_ac;
    }
  CHECK(diff_ab == 0);
  CHECK(diff_ac > 200);
}

TEST_CASE("sigma zero returns the input unchanged") {
  const ImageGrid clean = test::random_image(8, 9);
  const ImageGrid out = nlm::add_gaussian_noise(clean, {0.0, 7});
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) CHECK(out.at(r, c) == clean.at(r, c));
}

TEST_CASE("noise is not clamped to the display range") {
  const ImageGrid clean(32, 0.0);
  const ImageGrid noisy = nlm::add_gaussian_noise(clean, {50.0, 3});
  int below = 0;
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c)
      if (noisy.at(r, c) < 0.0) ++below;
  CHECK(below > 200);  // about half of 1024 draws land below zero
}

TEST_CASE("sample moments match sigma at CLT scale") {
  const int side = 512;
  const double sigma = 20.0;
  const ImageGrid clean(side, 100.0);
  const ImageGrid noisy = nlm::add_gaussian_noise(clean, {sigma, 1234});

  double sum = 0.0, sum_sq = 0.0;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      const double e = noisy.at(r, c) - 100.0;
      sum += e;
      sum_sq += e * e;
    }
  const double n = static_cast<double>(side) * side;
  const double mean = sum / n;
  const double sd = std::sqrt(sum_sq / n - mean * mean);
  // se(mean) = sigma/sqrt(n) ~ 0.039, se(sd) ~ 0.028; +-0.25 is ~6 sigma.
  CHECK(std::abs(mean) < 0.25);
  CHECK(std::abs(sd - sigma) < 0.25);
}

TEST_CASE("row-major neighbours are uncorrelated") {
  const int side = 512;
  const ImageGrid clean(side, 0.0);
  const ImageGrid noisy = nlm::add_gaussian_noise(clean, {1.0, 77});

  double acc = 0.0, var = 0.0;
  long count = 0;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c + 1 < side; ++c) {
      acc += noisy.at(r, c) * noisy.at(r, c + 1);
      var += noisy.at(r, c) * noisy.at(r, c);
      ++count;
    }
  CHECK(std::abs(acc / var) < 0.01);
  CHECK(count == side * (side - 1));
}

TEST_CASE("invalid noise specs are rejected") {
  const ImageGrid clean(4, 0.0);
  CHECK_THROWS_AS(nlm::add_gaussian_noise(clean, {-1.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(nlm::add_gaussian_noise(clean, {std::nan(""), 0}), std::invalid_argument);
}

TEST_CASE("unit-interval draws stay strictly inside (0,1)") {
  nlm::GaussianStream stream(99);
  for (int i = 0; i < 20000; ++i) {
    const double u = stream.next_unit_open();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}
