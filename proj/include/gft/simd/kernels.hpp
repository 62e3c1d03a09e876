#pragma once

// Data-parallel inner loops over structure-of-arrays jet batches.
//
// Each kernel exists as a scalar reference and, where the CPU supports it,
// an AVX2 variant. Both evaluate the same expression in the same operation
// order without fused multiply-add, so their outputs are bit-identical; the
// equivalence tests rely on this.
//
// This header is included by the AVX2 translation unit, which is compiled
// with -mavx2. Keep it free of standard-library templates so no AVX2 code
// can leak into shared inline functions.

#include <cstddef>

namespace gft::simd {

/// Four complex planes (value and three derivatives), split re/im.
struct JetPlanes {
  double* re[4];
  double* im[4];
};

struct ConstJetPlanes {
  const double* re[4];
  const double* im[4];
};

enum class Functional : int { C = 0, Sstar = 1, BC = 2, BSstar = 3, BCI = 4 };

struct KernelTable {
  const char* name;
  void (*jet_add)(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n);
  void (*jet_sub)(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n);
  void (*jet_mul)(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n);
  /// No singularity check; callers screen |b.v0| separately.
  void (*jet_div)(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n);
  /// f'''/f' - 3/2 (f''/f')^2
  void (*schwarzian)(ConstJetPlanes f, double* s_re, double* s_im, std::size_t n);
  /// f''/f'
  void (*pre_schwarzian)(ConstJetPlanes f, double* out_re, double* out_im, std::size_t n);
  /// (1 - |z|^2)^2 |s|
  void (*weighted_modulus)(const double* z_re, const double* z_im, const double* s_re, const double* s_im,
                           double* out, std::size_t n);
  void (*functional)(Functional family, const double* z_re, const double* z_im, ConstJetPlanes f, double* out,
                     std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;
/// Best available table. GFT_SIMD=scalar forces the reference kernels.
const KernelTable& active_kernels() noexcept;

}  // namespace gft::simd
