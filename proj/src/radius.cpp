#include "gft/radius.hpp"

#include <cmath>
#include <numbers>

#include "gft/error.hpp"

namespace gft {

double radius_polynomial(double alpha, double x) { return (-1.0 - alpha) * x * x + 4.0 * x + alpha - 1.0; }

double radius_closed_form(double alpha) { return (1.0 - alpha) / (2.0 + std::sqrt(3.0 + alpha * alpha)); }

RadiusResult radius_inverse_convexity(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [0,1)");
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (radius_polynomial(alpha, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  RadiusResult out;
  out.alpha = alpha;
  out.r_alpha = std::abs(radius_polynomial(alpha, lo)) < std::abs(radius_polynomial(alpha, hi)) ? lo : hi;
  out.residual = std::abs(radius_polynomial(alpha, out.r_alpha));
  out.closed_form = radius_closed_form(alpha);
  return out;
}

RadiusCheck verify_on_disk(const FunctionExpr& g, double alpha, double radius, const DiskSampler& s) {
  DiskSampler local = s;
  local.r_max = radius;
  local.exclusion_radius = std::min(s.exclusion_radius, radius / 10);
  const FamilyVerdict v = membership(g, Family::BCI, alpha, local);
  return {radius, v.holds_on_samples, v.margin, v.witness};
}

RadiusCheck verify_radius(const FunctionExpr& g, double alpha, const DiskSampler& s) {
  return verify_on_disk(g, alpha, radius_inverse_convexity(alpha).r_alpha, s);
}

RotationWitness rotated_witness(const FunctionExpr& g, double alpha, double r) {
  RotationWitness best;
  best.value = INFINITY;
  for (int k = 0; k < 8; ++k) {
    const double tau = k * std::numbers::pi / 4;
    const cplx e = std::polar(1.0, tau);
    const FunctionExpr rotated = e * substitute(g, e * FunctionExpr::var());
    for (double sign : {1.0, -1.0}) {
      const cplx z = sign * r;
      const double v = functional_value(rotated, Family::BCI, z);
      if (v < best.value) best = {false, v, tau, z};
    }
  }
  best.violates = best.value < alpha;
  return best;
}

}  // namespace gft
