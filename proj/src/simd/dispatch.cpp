#include <atomic>
#include <cstdlib>
#include <string>

#include "fdepth/error.hpp"
#include "fdepth/simd/band_kernels.hpp"

namespace fdepth::simd {

#if !defined(FDEPTH_HAVE_AVX2)
const BandKernels* detail::avx2_kernels() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(FDEPTH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

// -1: none, otherwise static_cast<int>(Isa)
std::atomic<int> g_override{-1};

Isa initial_isa() {
  if (const char* env = std::getenv("FDEPTH_ISA"); env && std::string(env) == "scalar") return Isa::scalar;
  return detect_isa();
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return detail::avx2_kernels() != nullptr && cpu_has_avx2();
  }
  return false;
}

Isa detect_isa() { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const BandKernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) throw Error("instruction set '" + std::string(to_string(isa)) + "' is not available");
  return isa == Isa::avx2 ? *detail::avx2_kernels() : detail::scalar_kernels();
}

const BandKernels& active_kernels() {
  static const Isa detected = initial_isa();
  const int forced = g_override.load(std::memory_order_relaxed);
  return kernels_for(forced >= 0 ? static_cast<Isa>(forced) : detected);
}

void set_isa_override(Isa isa) {
  kernels_for(isa);
  g_override.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void clear_isa_override() { g_override.store(-1, std::memory_order_relaxed); }

}  // namespace fdepth::simd
