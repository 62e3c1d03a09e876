#include "gft/schwarz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "gft/batch.hpp"
#include "gft/error.hpp"
#include "golden.hpp"

namespace gft {

namespace {

Jet3 checked_jet(const FunctionExpr& f, cplx z) {
  JetStatus status = JetStatus::Ok;
  const Jet3 j = f.try_eval_jet(z, status);
  if (status != JetStatus::Ok) throw Error(ErrorKind::EvaluationFailed, "cannot evaluate " + f.print() + " here");
  for (int k = 0; k < 4; ++k) {
    if (!std::isfinite(j[k].real()) || !std::isfinite(j[k].imag())) {
      throw Error(ErrorKind::EvaluationFailed, "non-finite jet for " + f.print());
    }
  }
  if (std::abs(j.v1) < kSingularityThreshold) throw Error(ErrorKind::LocallyNonUnivalent, "f' vanishes");
  return j;
}

double weight(cplx z) {
  const double w = 1.0 - std::norm(z);
  return w * w;
}

}  // namespace

cplx schwarzian(const FunctionExpr& f, cplx z) {
  const Jet3 j = checked_jet(f, z);
  const cplx r = j.v2 / j.v1;
  return j.v3 / j.v1 - 1.5 * r * r;
}

cplx pre_schwarzian(const FunctionExpr& f, cplx z) {
  const Jet3 j = checked_jet(f, z);
  return j.v2 / j.v1;
}

namespace {

cplx circle_mean_schwarzian(const FunctionExpr& f, double rho, int n) {
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) sum += schwarzian(f, std::polar(rho, 2.0 * std::numbers::pi * k / n));
  return sum / static_cast<double>(n);
}

// S_f at 0 for f with at most a simple pole there; nullopt when that cannot
// be established numerically.
std::optional<cplx> schwarzian_at_origin(const FunctionExpr& f) {
  JetStatus status = JetStatus::Ok;
  const Jet3 j = f.try_eval_jet(0.0, status);
  if (status == JetStatus::Ok) {
    if (std::abs(j.v1) < kSingularityThreshold) return std::nullopt;
    const cplx r = j.v2 / j.v1;
    return j.v3 / j.v1 - 1.5 * r * r;
  }
  try {
    if (std::abs(laurent_b_check(f, 1e-2).residue_estimate) < 1e-6) return std::nullopt;
    // S_f = S_{1/f} is analytic at a simple pole, so the mean value property
    // applies; disagreement between radii means another singularity is close.
    const cplx a = circle_mean_schwarzian(f, 0.05, 128);
    const cplx b = circle_mean_schwarzian(f, 0.025, 128);
    if (!(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)))) return std::nullopt;
    return a;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SchwarzianSample schwarzian_sample(const FunctionExpr& f, cplx z) {
  const cplx s = schwarzian(f, z);
  return {z, s, weight(z) * std::abs(s)};
}

NormEstimate schwarzian_norm(const FunctionExpr& f, int rings, int points_per_ring, int refine_iters) {
  if (rings < 8 || points_per_ring < 64) {
    throw Error(ErrorKind::InvalidArgument, "norm estimation needs rings >= 8 and points_per_ring >= 64");
  }
  const double dtheta = 2.0 * std::numbers::pi / points_per_ring;
  auto radius = [&](int k) { return kNormRadiusCeiling * k / rings; };

  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(rings) * points_per_ring);
  for (int k = 1; k <= rings; ++k) {
    for (int j = 0; j < points_per_ring; ++j) z.push_back(std::polar(radius(k), j * dtheta));
  }
  const SchwarzianBatch batch = batch_schwarzian(f, z);

  NormEstimate est;
  std::size_t best = z.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double w = batch.weighted[i];
    if (std::isnan(w)) {
      ++est.failed;
      continue;
    }
    ++est.evaluated;
    if (best == z.size() || w > est.lower_bound) {
      est.lower_bound = w;
      best = i;
    }
  }
  if (est.failed * 100 > z.size() || best == z.size()) {
    throw Error(ErrorKind::EvaluationFailed,
                std::to_string(est.failed) + " of " + std::to_string(z.size()) + " grid points failed");
  }
  est.argmax = z[best];
  if (const auto s0 = schwarzian_at_origin(f); s0 && std::abs(*s0) > est.lower_bound) {
    est.lower_bound = std::abs(*s0);
    est.argmax = 0.0;
  }

  auto value_at = [&](cplx p) {
    try {
      return schwarzian_sample(f, p).weighted;
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  const int kb = static_cast<int>(best) / points_per_ring + 1;
  const int jb = static_cast<int>(best) % points_per_ring;
  const double theta0 = jb * dtheta;
  const double r_lo = std::max(kNormRadiusFloor, radius(kb - 1));
  const double r_hi = std::min(kNormRadiusCeiling, radius(kb + 1));

  const auto in_r = detail::golden_maximize([&](double r) { return value_at(std::polar(r, theta0)); }, r_lo, r_hi,
                                            refine_iters);
  double r_best = std::abs(est.argmax);
  if (in_r.value > est.lower_bound) {
    est.lower_bound = in_r.value;
    est.argmax = std::polar(in_r.x, theta0);
    r_best = in_r.x;
  }
  const auto in_theta = detail::golden_maximize([&](double t) { return value_at(std::polar(r_best, t)); },
                                                theta0 - dtheta, theta0 + dtheta, refine_iters);
  if (in_theta.value > est.lower_bound) {
    est.lower_bound = in_theta.value;
    est.argmax = std::polar(r_best, in_theta.x);
  }
  return est;
}

InvarianceResiduals invariance_residuals(const FunctionExpr& f, const Mobius& t, std::span<const cplx> samples) {
  const FunctionExpr tf = mobius_compose(f, t.a, t.b, t.c, t.d);
  const FunctionExpr rf = reciprocal(f);
  InvarianceResiduals res;
  for (cplx z : samples) {
    const cplx s = schwarzian(f, z);
    res.mobius = std::max(res.mobius, std::abs(schwarzian(tf, z) - s));
    res.reciprocal = std::max(res.reciprocal, std::abs(schwarzian(rf, z) - s));
  }
  return res;
}

}  // namespace gft
