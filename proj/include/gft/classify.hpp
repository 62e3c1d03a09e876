#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gft/expr.hpp"
#include "gft/family.hpp"

namespace gft {

/// Discretisation of the unit disk. Rings run from exclusion_radius out to
/// r_max with spacing geometric in the distance to the boundary, so most
/// rings sit close to |z| = r_max where the harmonic functionals attain
/// their minimum.
struct DiskSampler {
  double r_max = 0.999;
  int rings = 64;
  int points_per_ring = 512;
  double exclusion_radius = kDefaultExclusionRadius;
  std::vector<std::pair<cplx, double>> extra_singular_exclusions;  // (center, radius)

  /// InvalidArgument unless 0 < exclusion_radius < r_max < 1, rings >= 2,
  /// points_per_ring >= 1.
  void validate() const;
  double ring_radius(int k) const;
  double angle(int j) const;
  bool excluded(cplx z) const;
  /// Ring-major grid, excluded points dropped. z = 0 is not included.
  std::vector<cplx> points() const;
};

inline constexpr double kSampledTolerance = 1e-6;
inline constexpr double kClosedFormTolerance = 1e-9;
/// |f'| below this marks a sample as nearly non-univalent.
inline constexpr double kTinyDerivative = 1e-10;

/// Test functional of a family, signed so that membership of order alpha
/// means value >= alpha in every family. At z = 0 the removable-singularity
/// limit is used: for f = 1/z + a0 + ... the values are C -1, S* -1, BC 1,
/// BS* 1, BCI 1; for f(0) = 0, f'(0) != 0 the S*, BS* and BCI values are
/// 1, -1 and -1.
double functional_value(const FunctionExpr& f, Family family, cplx z);

struct FamilyVerdict {
  Family family = Family::C;
  double alpha = 0.0;
  bool holds_on_samples = false;
  double margin = 0.0;  // min functional - alpha
  cplx witness{};
  double witness_value = 0.0;
  double order_estimate = 0.0;
  double tolerance = kSampledTolerance;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  std::size_t tiny_derivative_count = 0;
  std::optional<cplx> tiny_derivative_witness;
  bool univalence_not_checked = true;
};

struct SampledMinimum {
  double value = 0.0;
  cplx where{};
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  std::size_t tiny_derivative_count = 0;
  std::optional<cplx> tiny_derivative_witness;
};

/// Minimum of the family functional over the sampler grid, z = 0 (when it
/// evaluates) and one golden-section pass along the extremal ring. More than
/// 1% failed samples raises EvaluationFailed.
SampledMinimum sampled_minimum(const FunctionExpr& f, Family family, const DiskSampler& s);

FamilyVerdict membership(const FunctionExpr& f, Family family, double alpha, const DiskSampler& s,
                         double tol = kSampledTolerance);

/// Raw minimum of the functional over the samples (not clamped).
double order_estimate(const FunctionExpr& f, Family family, const DiskSampler& s);

struct InjectivityCheck {
  std::size_t pairs = 0;
  std::size_t collisions = 0;
  std::optional<std::pair<cplx, cplx>> witness;
};

/// Heuristic: for random z1, Newton's method on f(z) = f(z1) from a random
/// start; a converged z != z1 inside the sampled annulus is a collision.
/// Finding none proves nothing.
InjectivityCheck injectivity_spot_check(const FunctionExpr& f, const DiskSampler& s, std::size_t pairs = 10000,
                                        std::uint64_t seed = 1);

}  // namespace gft
