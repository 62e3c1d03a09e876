#pragma once

// Batched jet evaluation over many sample points. Arithmetic nodes run
// through the dispatched SIMD kernels; elementary functions fall back to the
// scalar jet code per element. A failing element (pole, branch point,
// non-finite result) is flagged in `ok` instead of aborting the batch.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gft/expr.hpp"
#include "gft/family.hpp"
#include "gft/simd/kernels.hpp"

namespace gft {

class JetBatch {
 public:
  JetBatch() = default;
  explicit JetBatch(std::size_t n) { resize(n); }

  void resize(std::size_t n);
  std::size_t size() const noexcept { return n_; }

  simd::JetPlanes planes() noexcept;
  simd::ConstJetPlanes planes() const noexcept;

  Jet3 get(std::size_t i) const noexcept;
  void set(std::size_t i, const Jet3& j) noexcept;

  const double* re(int k) const noexcept { return re_[k].data(); }
  const double* im(int k) const noexcept { return im_[k].data(); }

 private:
  std::size_t n_ = 0;
  std::array<std::vector<double>, 4> re_;
  std::array<std::vector<double>, 4> im_;
};

/// Reusable scratch for evaluating one expression over batches.
class BatchEvaluator {
 public:
  explicit BatchEvaluator(FunctionExpr expr, const simd::KernelTable& kernels = simd::active_kernels());

  /// out and ok are resized to z.size(); ok[i] == 1 when the jet is valid.
  void evaluate(std::span<const cplx> z, JetBatch& out, std::vector<std::uint8_t>& ok);

 private:
  FunctionExpr expr_;
  const simd::KernelTable* kernels_;
  std::vector<JetBatch> stack_;
};

simd::Functional to_functional(Family f) noexcept;

/// Values of a family functional at each point; NaN where evaluation
/// failed. If fprime_abs is non-null it receives |f'| per point.
std::vector<double> batch_functional(const FunctionExpr& f, Family family, std::span<const cplx> z,
                                     std::vector<double>* fprime_abs = nullptr,
                                     const simd::KernelTable& kernels = simd::active_kernels());

struct SchwarzianBatch {
  std::vector<cplx> s;          // NaN where evaluation failed
  std::vector<double> weighted; // (1 - |z|^2)^2 |S_f|, NaN where failed
};

SchwarzianBatch batch_schwarzian(const FunctionExpr& f, std::span<const cplx> z,
                                 const simd::KernelTable& kernels = simd::active_kernels());

/// Points per parallel chunk.
inline constexpr std::size_t kBatchChunk = 1024;

}  // namespace gft
