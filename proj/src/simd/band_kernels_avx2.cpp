// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "fdepth/simd/band_kernels.hpp"

namespace fdepth::simd::detail {
namespace {

constexpr std::size_t kLanes = 4;

// _mm256_min_pd(a, b) is (a < b ? a : b), which matches the scalar
// reference exactly, including for signed zeros.
void merge_envelope(std::span<const double> x, std::span<double> lower, std::span<double> upper) {
  const std::size_t n = x.size();
  std::size_t t = 0;
  for (; t + kLanes <= n; t += kLanes) {
    const __m256d v = _mm256_loadu_pd(x.data() + t);
    const __m256d lo = _mm256_loadu_pd(lower.data() + t);
    const __m256d hi = _mm256_loadu_pd(upper.data() + t);
    _mm256_storeu_pd(lower.data() + t, _mm256_min_pd(v, lo));
    _mm256_storeu_pd(upper.data() + t, _mm256_max_pd(v, hi));
  }
  for (; t < n; ++t) {
    if (x[t] < lower[t]) lower[t] = x[t];
    if (x[t] > upper[t]) upper[t] = x[t];
  }
}

inline unsigned inside_mask(const double* lower, const double* upper, const double* x) {
  const __m256d v = _mm256_loadu_pd(x);
  const __m256d ge = _mm256_cmp_pd(_mm256_loadu_pd(lower), v, _CMP_LE_OQ);
  const __m256d le = _mm256_cmp_pd(v, _mm256_loadu_pd(upper), _CMP_LE_OQ);
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_and_pd(ge, le)));
}

std::size_t count_inside(std::span<const double> lower, std::span<const double> upper,
                         std::span<const double> x) {
  const std::size_t n = x.size();
  std::size_t count = 0;
  std::size_t t = 0;
  for (; t + kLanes <= n; t += kLanes)
    count += std::popcount(inside_mask(lower.data() + t, upper.data() + t, x.data() + t));
  for (; t < n; ++t) count += (lower[t] <= x[t]) & (x[t] <= upper[t]);
  return count;
}

bool all_inside(std::span<const double> lower, std::span<const double> upper,
                std::span<const double> x) {
  const std::size_t n = x.size();
  std::size_t t = 0;
  for (; t + kLanes <= n; t += kLanes) {
    if (inside_mask(lower.data() + t, upper.data() + t, x.data() + t) != 0xF) return false;
  }
  for (; t < n; ++t) {
    if (!(lower[t] <= x[t] && x[t] <= upper[t])) return false;
  }
  return true;
}

}  // namespace

const BandKernels* avx2_kernels() {
  static const BandKernels k{"avx2", &merge_envelope, &count_inside, &all_inside};
  return &k;
}

}  // namespace fdepth::simd::detail
