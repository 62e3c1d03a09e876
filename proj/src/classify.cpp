#include "gft/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gft/batch.hpp"
#include "gft/error.hpp"
#include "gft/random.hpp"
#include "golden.hpp"

namespace gft {

void DiskSampler::validate() const {
  if (!(exclusion_radius > 0.0 && exclusion_radius < r_max && r_max < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "sampler needs 0 < exclusion_radius < r_max < 1");
  }
  if (rings < 2 || points_per_ring < 1) throw Error(ErrorKind::InvalidArgument, "sampler needs rings >= 2");
}

double DiskSampler::ring_radius(int k) const {
  const double gap0 = 1.0 - exclusion_radius;
  const double ratio = (1.0 - r_max) / gap0;
  if (k >= rings - 1) return r_max;
  return 1.0 - gap0 * std::pow(ratio, static_cast<double>(k) / (rings - 1));
}

double DiskSampler::angle(int j) const { return 2.0 * std::numbers::pi * j / points_per_ring; }

bool DiskSampler::excluded(cplx z) const {
  for (const auto& [c, r] : extra_singular_exclusions) {
    if (std::abs(z - c) < r) return true;
  }
  return false;
}

std::vector<cplx> DiskSampler::points() const {
  validate();
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(rings) * points_per_ring);
  for (int k = 0; k < rings; ++k) {
    const double r = ring_radius(k);
    for (int j = 0; j < points_per_ring; ++j) {
      const cplx z = std::polar(r, angle(j));
      if (!excluded(z)) out.push_back(z);
    }
  }
  return out;
}

namespace {

double from_jet(Family family, cplx z, const Jet3& j) {
  const double convex = 1.0 + (z * j.v2 / j.v1).real();
  const double star = (z * j.v1 / j.v0).real();
  switch (family) {
    case Family::C: return convex;
    case Family::Sstar: return star;
    case Family::BC: return -convex;
    case Family::BSstar: return -star;
    case Family::BCI: return convex - 2.0 * star;
  }
  return 0.0;
}

double value_at_origin(const FunctionExpr& f, Family family) {
  JetStatus status = JetStatus::Ok;
  const Jet3 j = f.try_eval_jet(0.0, status);
  if (status != JetStatus::Ok) {
    if (!laurent_b_check(f, 1e-3).is_b_form) {
      throw Error(ErrorKind::EvaluationFailed, "z = 0 is singular and f is not of the form 1/z + a0 + ...");
    }
    switch (family) {
      case Family::C:
      case Family::Sstar: return -1.0;
      default: return 1.0;
    }
  }
  if (std::abs(j.v1) < kSingularityThreshold) throw Error(ErrorKind::LocallyNonUnivalent, "f'(0) = 0");
  if (std::abs(j.v0) < kSingularityThreshold) {
    switch (family) {
      case Family::C: return 1.0;
      case Family::Sstar: return 1.0;
      case Family::BC: return -1.0;
      case Family::BSstar: return -1.0;
      case Family::BCI: return -1.0;
    }
  }
  return from_jet(family, 0.0, j);
}

double value_or_nan(const FunctionExpr& f, Family family, cplx z) {
  try {
    return functional_value(f, family, z);
  } catch (const Error&) {
    return NAN;
  }
}

}  // namespace

double functional_value(const FunctionExpr& f, Family family, cplx z) {
  if (z == 0.0) return value_at_origin(f, family);
  JetStatus status = JetStatus::Ok;
  const Jet3 j = f.try_eval_jet(z, status);
  if (status != JetStatus::Ok) throw Error(ErrorKind::EvaluationFailed, "cannot evaluate " + f.print() + " here");
  if (std::abs(j.v1) < kSingularityThreshold) throw Error(ErrorKind::LocallyNonUnivalent, "f' vanishes");
  const double v = from_jet(family, z, j);
  if (!std::isfinite(v)) throw Error(ErrorKind::EvaluationFailed, "non-finite functional");
  return v;
}

SampledMinimum sampled_minimum(const FunctionExpr& f, Family family, const DiskSampler& s) {
  const std::vector<cplx> z = s.points();
  std::vector<double> fprime;
  const std::vector<double> values = batch_functional(f, family, z, &fprime);

  SampledMinimum m;
  m.value = INFINITY;
  std::size_t best = z.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::isnan(values[i])) {
      ++m.failed;
      continue;
    }
    ++m.evaluated;
    if (fprime[i] < kTinyDerivative) {
      if (m.tiny_derivative_count++ == 0) m.tiny_derivative_witness = z[i];
    }
    if (values[i] < m.value) {
      m.value = values[i];
      best = i;
    }
  }
  if (m.failed * 100 > z.size() || best == z.size()) {
    throw Error(ErrorKind::EvaluationFailed,
                std::to_string(m.failed) + " of " + std::to_string(z.size()) + " samples failed");
  }
  m.where = z[best];

  const double at0 = value_or_nan(f, family, 0.0);
  if (!std::isnan(at0)) {
    ++m.evaluated;
    if (at0 < m.value) {
      m.value = at0;
      m.where = 0.0;
      return m;
    }
  }

  const double r = std::abs(m.where);
  const double t0 = std::arg(m.where);
  const double dt = 2.0 * std::numbers::pi / s.points_per_ring;
  const auto refined = detail::golden_minimize(
      [&](double t) {
        const cplx p = std::polar(r, t);
        return s.excluded(p) ? NAN : value_or_nan(f, family, p);
      },
      t0 - dt, t0 + dt, 60);
  if (refined.value < m.value) {
    m.value = refined.value;
    m.where = std::polar(r, refined.x);
  }
  return m;
}

FamilyVerdict membership(const FunctionExpr& f, Family family, double alpha, const DiskSampler& s, double tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [0,1)");
  const SampledMinimum m = sampled_minimum(f, family, s);
  FamilyVerdict v;
  v.family = family;
  v.alpha = alpha;
  v.margin = m.value - alpha;
  v.holds_on_samples = v.margin >= -tol;
  v.witness = m.where;
  v.witness_value = m.value;
  v.order_estimate = std::clamp(m.value, 0.0, 1.0);
  if (v.holds_on_samples) v.order_estimate = std::max(v.order_estimate, alpha);
  v.tolerance = tol;
  v.evaluated = m.evaluated;
  v.failed = m.failed;
  v.tiny_derivative_count = m.tiny_derivative_count;
  v.tiny_derivative_witness = m.tiny_derivative_witness;
  return v;
}

double order_estimate(const FunctionExpr& f, Family family, const DiskSampler& s) {
  return sampled_minimum(f, family, s).value;
}

InjectivityCheck injectivity_spot_check(const FunctionExpr& f, const DiskSampler& s, std::size_t pairs,
                                        std::uint64_t seed) {
  s.validate();
  std::mt19937_64 rng(seed);
  InjectivityCheck out;
  auto inside = [&](cplx z) {
    const double r = std::abs(z);
    return r > s.exclusion_radius && r < s.r_max && !s.excluded(z);
  };
  for (std::size_t i = 0; i < pairs; ++i) {
    const cplx z1 = random_annulus_point(rng, s.exclusion_radius, s.r_max);
    cplx z = random_annulus_point(rng, s.exclusion_radius, s.r_max);
    if (!inside(z1)) continue;
    JetStatus st = JetStatus::Ok;
    const cplx w = f.try_eval_jet(z1, st).v0;
    if (st != JetStatus::Ok) continue;
    ++out.pairs;
    // Newton on f(z) = f(z1) from a random start; a root away from z1
    // inside the disk is a second preimage.
    for (int it = 0; it < 40 && inside(z); ++it) {
      const Jet3 j = f.try_eval_jet(z, st);
      if (st != JetStatus::Ok || std::abs(j.v1) < kSingularityThreshold) break;
      const cplx r = j.v0 - w;
      if (std::abs(r) <= 1e-12 * (1.0 + std::abs(w))) {
        if (std::abs(z - z1) > 1e-6 && out.collisions++ == 0) out.witness = std::pair{z1, z};
        break;
      }
      z -= r / j.v1;
    }
  }
  return out;
}

}  // namespace gft
