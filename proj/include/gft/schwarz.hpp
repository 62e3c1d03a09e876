#pragma once

#include <span>
#include <vector>

#include "gft/expr.hpp"

namespace gft {

/// f'''/f' - 3/2 (f''/f')^2 from a single jet evaluation.
/// LocallyNonUnivalent when |f'(z)| is below the jet singularity threshold.
cplx schwarzian(const FunctionExpr& f, cplx z);
/// f''/f'.
cplx pre_schwarzian(const FunctionExpr& f, cplx z);

struct SchwarzianSample {
  cplx z;
  cplx s;
  double weighted;  // (1 - |z|^2)^2 |s|
};

SchwarzianSample schwarzian_sample(const FunctionExpr& f, cplx z);

struct NormEstimate {
  double lower_bound = 0.0;  // attained value, so a lower bound of the sup
  cplx argmax{};
  std::size_t evaluated = 0;
  std::size_t failed = 0;
};

// Below this radius a pole at 0 makes S_f cancel two O(1/z^2) terms, so
// refinement stops here and z = 0 is handled apart.
inline constexpr double kNormRadiusFloor = 1e-2;
inline constexpr double kNormRadiusCeiling = 1.0 - 1e-4;

/// Grid over rings r_k = kNormRadiusCeiling * k / rings, followed by
/// golden-section refinement in r and then in angle around the best cell.
/// The origin is a candidate too: evaluated directly when f is analytic
/// there, otherwise (simple pole) as the circle mean of S_f, accepted only
/// when two radii agree. Up to 1% of grid points may fail to evaluate; more
/// raises EvaluationFailed.
NormEstimate schwarzian_norm(const FunctionExpr& f, int rings = 64, int points_per_ring = 512,
                             int refine_iters = 60);

struct Mobius {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};
};

struct InvarianceResiduals {
  double mobius = 0.0;      // max |S_{T o f} - S_f|
  double reciprocal = 0.0;  // max |S_{1/f} - S_f|
  double value() const noexcept { return mobius > reciprocal ? mobius : reciprocal; }
};

/// Samples must avoid the singularities of f, T o f and 1/f; a failing sample
/// propagates its error.
InvarianceResiduals invariance_residuals(const FunctionExpr& f, const Mobius& t, std::span<const cplx> samples);

}  // namespace gft
