#include <cstdlib>
#include <cstring>

#include "gft/simd/kernels.hpp"

namespace gft::simd {

#if defined(GFT_HAVE_AVX2)
const KernelTable* avx2_table() noexcept;
#endif

const KernelTable* avx2_kernels() noexcept {
#if defined(GFT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable* table = [] {
    const char* forced = std::getenv("GFT_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return &scalar_kernels();
    const KernelTable* avx2 = avx2_kernels();
    return avx2 != nullptr ? avx2 : &scalar_kernels();
  }();
  return *table;
}

}  // namespace gft::simd
