#pragma once

// v'' + p v = 0 along rays z = rho e^{i theta}. With p = S_f / 2 and
// f = 1/z + a0 + ..., f = a0 + u/v where v(0) = 0, v'(0) = 1 and
// u(0) = 1, u'(0) = 0. Then f' = -1/v^2 and
//   -Re(1 + z f''/f') = 2 Re(z v'/v) - 1,
// so f is meromorphically convex of order alpha exactly when v is starlike
// of order (1 + alpha)/2.

#include <functional>
#include <optional>
#include <vector>

#include "gft/classify.hpp"
#include "gft/expr.hpp"
#include "gft/palpha.hpp"

namespace gft {

using PFunction = std::function<cplx(cplx)>;

/// z -> S_f(z)/2 from jets; NonAnalyticSample when S_f cannot be evaluated.
PFunction half_schwarzian(const FunctionExpr& f);
/// z -> p(z) from an expression; NonAnalyticSample on failure.
PFunction from_expression(const FunctionExpr& p);

struct RaySolution {
  double theta = 0.0;
  std::vector<double> rho_nodes;  // rho_nodes[0] = 0
  std::vector<cplx> v, vp;        // vp = dv/dz
  std::vector<cplx> u, up;
  double max_wronskian_drift = 0.0;  // max |u v' - u' v - 1|
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;

  cplx z(std::size_t i) const { return std::polar(rho_nodes[i], theta); }
};

inline constexpr int kDefaultRayNodes = 257;

/// Starts from the series v = z - p z^3/6, u = 1 - p z^2/2 at
/// rho0 = min(1e-3, r_max/10), with p taken at 0 when it evaluates there.
RaySolution solve_ray(const PFunction& p, double theta, double r_max, double rel_tol = 1e-12,
                      int nodes = kDefaultRayNodes);

struct LemmaEquivalence {
  FamilyVerdict bc_verdict;
  double v_starlike_min = 0.0;     // min Re(z v'/v) over ray nodes
  double v_starlike_margin = 0.0;  // v_starlike_min - (1 + alpha)/2
  cplx v_witness{};
  double max_wronskian_drift = 0.0;
  bool v_side_holds = false;  // margin >= -v_tolerance
  bool agree = false;
};

inline constexpr double kVStarlikeTolerance = 1e-4;

LemmaEquivalence lemma_equivalence_check(const FunctionExpr& f, double alpha, int n_rays, const DiskSampler& s,
                                         double rel_tol = 1e-12);

/// f = -integral_omega^x y(s)^-2 ds along (0, 1 - eps_end), built from the
/// P(alpha) solution y of y'' + q y = 0.
class RealAxisReconstruction {
 public:
  RealAxisReconstruction(QFunction q, double omega, double eps_end = kDefaultEpsEnd);

  double omega() const noexcept { return omega_; }
  double upper() const noexcept { return sol_.nodes.back(); }

  double f(double x) const;
  double f1(double x) const;  // -1/y^2
  double f2(double x) const;  // 2 y'/y^3
  double f3(double x) const;  // -2 q/y^2 - 6 y'^2/y^4
  /// f'''/f' - 3/2 (f''/f')^2 from the three closed-form derivatives.
  double schwarzian(double x) const;
  /// The same quantity from 5-point central differences of f' with step h.
  double schwarzian_fd(double x, double h) const;
  /// 1 + x f''/f' = 1 - 2 x y'/y.
  double convexity(double x) const;
  double q(double x) const { return q_(x); }

 private:
  YState state(double x) const;

  QFunction q_;
  double omega_;
  OdeSolution sol_;
};

/// YVanishes when y <= 0 at any node of the solution.
RealAxisReconstruction reconstruct_f_from_y(const QFunction& q, double omega, double eps_end = kDefaultEpsEnd);

}  // namespace gft
