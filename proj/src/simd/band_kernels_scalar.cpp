#include "fdepth/simd/band_kernels.hpp"

namespace fdepth::simd::detail {
namespace {

void merge_envelope(std::span<const double> x, std::span<double> lower, std::span<double> upper) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] < lower[t]) lower[t] = x[t];
    if (x[t] > upper[t]) upper[t] = x[t];
  }
}

std::size_t count_inside(std::span<const double> lower, std::span<const double> upper,
                         std::span<const double> x) {
  std::size_t n = 0;
  for (std::size_t t = 0; t < x.size(); ++t) n += (lower[t] <= x[t]) & (x[t] <= upper[t]);
  return n;
}

bool all_inside(std::span<const double> lower, std::span<const double> upper,
                std::span<const double> x) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (!(lower[t] <= x[t] && x[t] <= upper[t])) return false;
  }
  return true;
}

}  // namespace

const BandKernels& scalar_kernels() {
  static const BandKernels k{"scalar", &merge_envelope, &count_inside, &all_inside};
  return k;
}

}  // namespace fdepth::simd::detail
