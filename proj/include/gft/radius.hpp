#pragma once

// Radius of inverse convexity: the unique zero r_alpha in (0, 1) of
//   P_alpha(x) = (-1 - alpha) x^2 + 4 x + alpha - 1.
// P_alpha(0) = alpha - 1 < 0 and P_alpha(1) = 2 > 0. Solving the quadratic
// gives r_alpha = (2 - sqrt(3 + alpha^2)) / (1 + alpha), evaluated here in
// the cancellation-free form (1 - alpha) / (2 + sqrt(3 + alpha^2)).

#include <vector>

#include "gft/classify.hpp"
#include "gft/expr.hpp"

namespace gft {

double radius_polynomial(double alpha, double x);
double radius_closed_form(double alpha);

struct RadiusResult {
  double alpha = 0.0;
  double r_alpha = 0.0;  // bisection root
  double residual = 0.0; // |P_alpha(r_alpha)|
  double closed_form = 0.0;
};

/// Requires 0 <= alpha < 1.
RadiusResult radius_inverse_convexity(double alpha);

struct RadiusCheck {
  double radius = 0.0;
  bool holds_inside = false;
  double margin = 0.0;
  cplx witness{};
};

/// The inverse-convexity functional of g, tested against alpha on the disk
/// |z| <= radius (the sampler's r_max is replaced by radius).
RadiusCheck verify_on_disk(const FunctionExpr& g, double alpha, double radius, const DiskSampler& s);
/// verify_on_disk at radius r_alpha.
RadiusCheck verify_radius(const FunctionExpr& g, double alpha, const DiskSampler& s);

struct RotationWitness {
  bool violates = false;
  double value = 0.0;  // smallest functional value found
  double tau = 0.0;    // rotation angle
  cplx z{};            // point on |z| = r
};

/// Evaluates the inverse-convexity functional of e^{i tau} g(e^{i tau} z)
/// at z = +-r for tau = k pi/4, k = 0..7, and reports the smallest value.
RotationWitness rotated_witness(const FunctionExpr& g, double alpha, double r);

}  // namespace gft
