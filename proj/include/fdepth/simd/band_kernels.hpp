#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace fdepth::simd {

// Inner loops of band containment over the time grid. Every variant must
// produce results identical to the scalar reference for all inputs
// (comparisons only, no arithmetic reassociation).
struct BandKernels {
  std::string_view name;

  // lower[t] = min(lower[t], x[t]); upper[t] = max(upper[t], x[t])
  void (*merge_envelope)(std::span<const double> x, std::span<double> lower, std::span<double> upper);

  // Number of t with lower[t] <= x[t] <= upper[t].
  std::size_t (*count_inside)(std::span<const double> lower, std::span<const double> upper,
                              std::span<const double> x);

  // True iff lower[t] <= x[t] <= upper[t] for all t. Stops at the first miss.
  bool (*all_inside)(std::span<const double> lower, std::span<const double> upper,
                     std::span<const double> x);
};

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

// Best instruction set supported by both the build and the running CPU.
Isa detect_isa();
bool isa_available(Isa isa);

// Throws fdepth::Error if `isa` is not available.
const BandKernels& kernels_for(Isa isa);

// Kernels used by the depth routines: the override if one is set,
// otherwise the detected ISA. FDEPTH_ISA=scalar in the environment forces
// the scalar path at first use.
const BandKernels& active_kernels();
void set_isa_override(Isa isa);
void clear_isa_override();

namespace detail {
const BandKernels& scalar_kernels();
// Null when the build has no AVX2 variant.
const BandKernels* avx2_kernels();
}  // namespace detail

}  // namespace fdepth::simd
