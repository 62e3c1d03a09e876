#pragma once

// Real-axis engine for y'' + q y = 0, y(0) = 0, y'(0) = 1 on [0, 1).
//
// q is a nonnegative weight on [0, 1). A q belongs to P(alpha) when the
// solution stays positive on (0, 1) and lim_{x -> 1-} y'/y >= alpha. The
// limit is estimated by Richardson extrapolation of y'/y at x = 1 - 2^-k;
// the solver never integrates all the way to 1 because q may be unbounded
// there.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/expr.hpp"

namespace gft {

class QFunction {
 public:
  enum class Kind { Constant, Expression, Samples, Callable };

  static QFunction constant(double c);
  /// Expression in the real variable x, e.g. "(2-2*0.5)/(pi*(1+x^2))".
  static QFunction expression(std::string_view text);
  static QFunction expression(FunctionExpr e);
  /// Piecewise linear through (x[i], q[i]); x increasing, x[0] = 0.
  /// Held constant past the last node.
  static QFunction samples(std::vector<double> x, std::vector<double> q);
  static QFunction callable(std::function<double(double)> fn, std::string description);

  /// q(x). NonnegativityViolated when q(x) < 0, EvaluationFailed when q
  /// cannot be evaluated or is not finite.
  double operator()(double x) const;

  Kind kind() const noexcept { return kind_; }
  std::string describe() const;
  /// Only meaningful for Kind::Constant.
  double constant_value() const noexcept { return c_; }
  const std::vector<double>& sample_x() const noexcept { return xs_; }
  const std::vector<double>& sample_q() const noexcept { return qs_; }

 private:
  QFunction() = default;
  Kind kind_ = Kind::Constant;
  double c_ = 0.0;
  std::shared_ptr<const FunctionExpr> expr_;
  std::vector<double> xs_, qs_;
  std::function<double(double)> fn_;
  std::string description_;
};

inline constexpr double kDefaultEpsEnd = 1e-6;
inline constexpr double kDefaultOdeRelTol = 1e-12;
inline constexpr int kUniformNodes = 512;

struct OdeSolution {
  std::vector<double> nodes;  // 0 = nodes[0] < ... < nodes.back() = 1 - eps_end
  std::vector<double> y;
  std::vector<double> yp;
  double eps_end = kDefaultEpsEnd;
  double rel_tol = kDefaultOdeRelTol;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double min_step = 0.0;
};

/// Output nodes: kUniformNodes uniform points plus 1 - 2^-k for every k
/// with 1 - 2^-k < 1 - eps_end, plus the end point 1 - eps_end.
std::vector<double> ivp_nodes(double eps_end);

/// Requires 1e-8 <= eps_end <= 1e-2 and rel_tol <= 1e-8.
OdeSolution integrate_ivp(const QFunction& q, double eps_end = kDefaultEpsEnd, double rel_tol = kDefaultOdeRelTol);

struct YState {
  double y;
  double yp;
};

/// (y, y') at any x in [0, 1 - eps_end], re-integrating from the closest
/// node at or below x.
YState state_at(const QFunction& q, const OdeSolution& sol, double x);

struct PalphaVerdict {
  bool positive_on_01 = false;
  std::optional<double> first_zero;
  double limit_estimate = 0.0;  // NaN when y has a zero
  double alpha = 0.0;
  double tolerance = 1e-6;
  bool member = false;
  std::vector<double> tail_x;      // 1 - 2^-k
  std::vector<double> tail_ratio;  // y'/y there
  std::vector<double> extrapolants;

  bool member_at(double a, double tol) const noexcept {
    return positive_on_01 && limit_estimate >= a - tol;
  }
};

inline constexpr double kExtrapolationAgreement = 1e-5;
inline constexpr int kFirstTailIndex = 7;
inline constexpr int kLastTailIndex = 20;

/// Requires 0 <= alpha <= 1. ExtrapolationError when the last three
/// extrapolants of y'/y disagree by more than kExtrapolationAgreement.
PalphaVerdict check_palpha(const QFunction& q, double alpha, double tol = 1e-6, double eps_end = kDefaultEpsEnd);

struct IntegralCriterion {
  double integral = 0.0;
  double error_estimate = 0.0;
  double c = 0.0;
  bool holds = false;  // integral <= c + 1e-10
};

/// Integral of q over [0, 1) against the bound c (c <= 1). Expression and
/// callable weights use tanh-sinh quadrature, which tolerates integrable
/// blow-up at x = 1; sampled weights are integrated exactly.
IntegralCriterion integral_criterion(const QFunction& q, double c);

struct ConstantSolution {
  double target = 0.0;
  double t = 0.0;  // sqrt(c) in (0, pi/2)
  double c = 0.0;
  double residual = 0.0;  // |t cot t - target|
};

/// Solves t cot t = target on (0, pi/2) by bisection down to adjacent
/// doubles. TargetOutOfRange unless 0 < target < 1.
ConstantSolution constant_solver(double target_limit);

/// (1 - beta)(n + 1) x^n
QFunction sharpness_weight(int n, double beta);

struct SharpnessResult {
  int n = 0;
  double beta = 0.0;
  std::optional<double> x0;            // first x with x y'/y <= beta
  std::optional<double> ratio_at_x0;
  std::optional<double> convexity_value;  // 1 - 2 x0 y'(x0)/y(x0)
  double min_ratio = 0.0;              // min of x y'/y over (0, 1 - eps_end]
  double min_ratio_at = 0.0;
};

SharpnessResult sharpness_construct(int n, double beta, double eps_end = kDefaultEpsEnd);

}  // namespace gft
