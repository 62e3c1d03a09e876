#pragma once

// Executable cross-checks: each report lists hypothesis checks and a
// conclusion check, and is consistent unless every hypothesis passed while
// the conclusion failed.

#include <string>
#include <vector>

#include "gft/classify.hpp"
#include "gft/expr.hpp"
#include "gft/palpha.hpp"

namespace gft {

enum class TheoremId {
  Sufficiency,        // |S_f| <= 2 q(|z|), q in P((1+alpha)/2)  =>  f in BC(alpha)
  Sharpness,          // (1+alpha)/2 cannot be lowered: the q_beta construction
  Duality,            // g in BCI(alpha)  <=>  1/(z (1/g)') in BS*(alpha)
  Nesting,            // BCI(alpha) inside BCI(beta) for beta < alpha
  ScaleInvariance,    // BCI functional unchanged under g -> lambda g
  ProperContainment,  // BCI(alpha) inside BS*(0), strictly
  Characterization,   // g in BCI(alpha)  <=>  1/g in C(alpha)
  Factorization,      // f in BC(alpha)  <=>  v in S*((1+alpha)/2)
};

std::string_view to_string(TheoremId id) noexcept;

struct Check {
  std::string name;
  bool pass = false;
  double margin = 0.0;
};

struct TheoremReport {
  TheoremId id = TheoremId::Sufficiency;
  std::string inputs;
  std::vector<Check> hypothesis_checks;
  Check conclusion;
  std::vector<Check> observations;  // extra evidence that is neither hypothesis nor conclusion
  bool consistent = true;

  bool hypotheses_pass() const noexcept;
  /// consistent = !(hypotheses_pass() && !conclusion.pass)
  void finalize() noexcept;
};

TheoremReport verify_sufficiency(const FunctionExpr& f, const QFunction& q, double alpha, const DiskSampler& s,
                                 double tol = 1e-9);

/// 1/(z (1/g)'), built at the expression level.
FunctionExpr duality_transform(const FunctionExpr& g);

/// Consistent when both memberships agree.
TheoremReport verify_duality(const FunctionExpr& g, double alpha, const DiskSampler& s);

/// Nesting, scale invariance (lambda = 2, i) and containment in BS*(0),
/// plus the strictness witness z + 1/z - 2.
std::vector<TheoremReport> verify_inclusions(const FunctionExpr& g, const std::vector<double>& alphas,
                                             const DiskSampler& s);

/// Consistent when membership of g in BCI(alpha) and of 1/g in C(alpha) agree.
TheoremReport verify_characterization(const FunctionExpr& g, double alpha, const DiskSampler& s);

TheoremReport verify_factorization(const FunctionExpr& f, double alpha, int n_rays, const DiskSampler& s);

/// Hypothesis: the integral of q_beta is 1 - beta. Conclusion: the
/// construction finds x0 with x0 y'/y <= beta.
TheoremReport sharpness_report(int n, double beta, double eps_end = kDefaultEpsEnd);

}  // namespace gft
