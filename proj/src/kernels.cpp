#include "nlmeans/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nlm {
namespace {

void check_offset(int di, int dj, int patch_radius) {
  if (patch_radius < 0) throw std::invalid_argument("patch radius must be non-negative");
  if (std::abs(di) > patch_radius || std::abs(dj) > patch_radius) {
    throw std::invalid_argument("kernel offset outside patch");
  }
}

double k0_weight(int di, int dj, int patch_radius) {
  if (patch_radius == 0) return 1.0;
  const int j = std::max(std::abs(di), std::abs(dj));
  double w = 0.0;
  for (int k = std::max(1, j); k <= patch_radius; ++k) {
    const double s = 2.0 * k + 1.0;
    w += 1.0 / (s * s);
  }
  return w;
}

}  // namespace

double kernel_weight(const KernelSpec& spec, int di, int dj, int patch_radius) {
  check_offset(di, dj, patch_radius);
  switch (spec.kind) {
    case KernelKind::kRect:
      return 1.0;
    case KernelKind::kGaussian:
      if (!(spec.bandwidth > 0.0)) throw std::invalid_argument("gaussian kernel bandwidth must be positive");
      return std::exp(-(static_cast<double>(di) * di + static_cast<double>(dj) * dj) /
                      (2.0 * spec.bandwidth));
    case KernelKind::kK0:
      return k0_weight(di, dj, patch_radius);
  }
  throw std::invalid_argument("unknown kernel kind");
}

KernelTable::KernelTable(const KernelSpec& spec, int patch_radius) {
  if (patch_radius < 0) throw std::invalid_argument("patch radius must be non-negative");
  radius_ = patch_radius;
  const int span = 2 * patch_radius + 1;
  weights_.reserve(static_cast<std::size_t>(span) * span);
  for (int di = -patch_radius; di <= patch_radius; ++di) {
    for (int dj = -patch_radius; dj <= patch_radius; ++dj) {
      const double w = kernel_weight(spec, di, dj, patch_radius);
      weights_.push_back(w);
      sum_ += w;
    }
  }
}

std::string kernel_name(const KernelSpec& spec) {
  switch (spec.kind) {
    case KernelKind::kRect:
      return "rect";
    case KernelKind::kGaussian: {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "gauss:%g", spec.bandwidth);
      return buf;
    }
    case KernelKind::kK0:
      return "k0";
  }
  return "unknown";
}

KernelSpec parse_kernel(const std::string& text) {
  if (text == "rect") return KernelSpec::rect();
  if (text == "k0") return KernelSpec::k0();
  if (text.rfind("gauss:", 0) == 0) {
    const std::string arg = text.substr(6);
    std::size_t used = 0;
    double bw = 0.0;
    try {
      bw = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad gaussian kernel bandwidth: " + arg);
    }
    if (used != arg.size() || !(bw > 0.0)) {
      throw std::invalid_argument("bad gaussian kernel bandwidth: " + arg);
    }
    return KernelSpec::gaussian(bw);
  }
  throw std::invalid_argument("unknown kernel '" + text + "' (expected rect, gauss:<h>, or k0)");
}

}  // namespace nlm
