#include "gft/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gft/error.hpp"
#include "gft/ode.hpp"
#include "gft/parallel.hpp"
#include "gft/schwarz.hpp"

namespace gft {

PFunction half_schwarzian(const FunctionExpr& f) {
  return [f](cplx z) {
    try {
      return 0.5 * schwarzian(f, z);
    } catch (const Error& e) {
      throw Error(ErrorKind::NonAnalyticSample, e.what());
    }
  };
}

PFunction from_expression(const FunctionExpr& p) {
  return [p](cplx z) {
    JetStatus status = JetStatus::Ok;
    const cplx v = p.try_eval_jet(z, status).v0;
    if (status != JetStatus::Ok || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::NonAnalyticSample, "p cannot be evaluated on the ray");
    }
    return v;
  };
}

RaySolution solve_ray(const PFunction& p, double theta, double r_max, double rel_tol, int nodes) {
  if (!(r_max > 0.0 && r_max < 1.0) || nodes < 2) throw Error(ErrorKind::InvalidArgument, "need 0 < r_max < 1");
  const cplx dir = std::polar(1.0, theta);
  const double rho0 = std::min(1e-3, r_max / 10);

  cplx p0;
  try {
    p0 = p(0.0);
  } catch (const Error&) {
    p0 = p(rho0 * dir);
  }
  const cplx z0 = rho0 * dir;
  const std::array<cplx, 4> start{z0 - p0 * z0 * z0 * z0 / 6.0, 1.0 - 0.5 * p0 * z0 * z0, 1.0 - 0.5 * p0 * z0 * z0,
                                  -p0 * z0};

  RaySolution sol;
  sol.theta = theta;
  sol.rho_nodes.push_back(0.0);
  sol.v.push_back(0.0);
  sol.vp.push_back(1.0);
  sol.u.push_back(1.0);
  sol.up.push_back(0.0);

  std::vector<double> out(static_cast<std::size_t>(nodes) - 1);
  for (int i = 1; i < nodes; ++i) out[i - 1] = std::max(rho0, r_max * i / (nodes - 1));

  OdeOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = rel_tol * 1e-2;
  auto rhs = [&](double rho, const std::array<cplx, 4>& s) {
    const cplx pz = p(rho * dir);
    return std::array<cplx, 4>{dir * s[1], -dir * pz * s[0], dir * s[3], -dir * pz * s[2]};
  };
  const OdeStats stats = dopri5<cplx, 4>(rhs, rho0, start, out, opt, [&](std::size_t, double rho, const auto& s) {
    sol.rho_nodes.push_back(rho);
    sol.v.push_back(s[0]);
    sol.vp.push_back(s[1]);
    sol.u.push_back(s[2]);
    sol.up.push_back(s[3]);
  });
  sol.accepted_steps = stats.accepted;
  sol.rejected_steps = stats.rejected;
  for (std::size_t i = 0; i < sol.v.size(); ++i) {
    const cplx w = sol.u[i] * sol.vp[i] - sol.up[i] * sol.v[i];
    sol.max_wronskian_drift = std::max(sol.max_wronskian_drift, std::abs(w - 1.0));
  }
  return sol;
}

LemmaEquivalence lemma_equivalence_check(const FunctionExpr& f, double alpha, int n_rays, const DiskSampler& s,
                                         double rel_tol) {
  if (n_rays < 1) throw Error(ErrorKind::InvalidArgument, "need at least one ray");
  const PFunction p = half_schwarzian(f);
  std::vector<RaySolution> rays(static_cast<std::size_t>(n_rays));
  parallel_for(rays.size(), [&](std::size_t j) {
    rays[j] = solve_ray(p, 2.0 * std::numbers::pi * j / n_rays, s.r_max, rel_tol);
  });

  LemmaEquivalence out;
  out.v_starlike_min = 1.0;  // z v'/v -> 1 at the origin
  for (const RaySolution& ray : rays) {
    out.max_wronskian_drift = std::max(out.max_wronskian_drift, ray.max_wronskian_drift);
    for (std::size_t i = 1; i < ray.v.size(); ++i) {
      const double val = (ray.z(i) * ray.vp[i] / ray.v[i]).real();
      if (val < out.v_starlike_min) {
        out.v_starlike_min = val;
        out.v_witness = ray.z(i);
      }
    }
  }
  out.v_starlike_margin = out.v_starlike_min - 0.5 * (1.0 + alpha);
  out.v_side_holds = out.v_starlike_margin >= -kVStarlikeTolerance;
  out.bc_verdict = membership(f, Family::BC, alpha, s);
  out.agree = out.v_side_holds == out.bc_verdict.holds_on_samples;
  return out;
}

RealAxisReconstruction::RealAxisReconstruction(QFunction q, double omega, double eps_end)
    : q_(std::move(q)), omega_(omega), sol_(integrate_ivp(q_, eps_end)) {
  if (!(omega > 0.0 && omega < sol_.nodes.back())) throw Error(ErrorKind::InvalidArgument, "omega must lie in (0, 1)");
  for (std::size_t i = 1; i < sol_.y.size(); ++i) {
    if (sol_.y[i] <= 0.0) throw Error(ErrorKind::YVanishes, "y vanishes at x = " + std::to_string(sol_.nodes[i]));
  }
}

YState RealAxisReconstruction::state(double x) const {
  if (!(x > 0.0 && x <= upper())) throw Error(ErrorKind::InvalidArgument, "x outside (0, 1 - eps_end]");
  return state_at(q_, sol_, x);
}

double RealAxisReconstruction::f(double x) const {
  auto integrand = [&](double t) {
    const double y = state(t).y;
    return -1.0 / (y * y);
  };
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, omega_, x, 15, 1e-10, &err);
  return v;
}

double RealAxisReconstruction::f1(double x) const {
  const double y = state(x).y;
  return -1.0 / (y * y);
}

double RealAxisReconstruction::f2(double x) const {
  const YState s = state(x);
  return 2.0 * s.yp / (s.y * s.y * s.y);
}

double RealAxisReconstruction::f3(double x) const {
  const YState s = state(x);
  const double y2 = s.y * s.y;
  return -2.0 * q_(x) / y2 - 6.0 * s.yp * s.yp / (y2 * y2);
}

double RealAxisReconstruction::schwarzian(double x) const {
  const double a = f1(x), b = f2(x), c = f3(x);
  const double r = b / a;
  return c / a - 1.5 * r * r;
}

double RealAxisReconstruction::schwarzian_fd(double x, double h) const {
  const double gm2 = f1(x - 2 * h), gm1 = f1(x - h), g0 = f1(x), gp1 = f1(x + h), gp2 = f1(x + 2 * h);
  const double d1 = (-gp2 + 8 * gp1 - 8 * gm1 + gm2) / (12 * h);
  const double d2 = (-gp2 + 16 * gp1 - 30 * g0 + 16 * gm1 - gm2) / (12 * h * h);
  const double r = d1 / g0;
  return d2 / g0 - 1.5 * r * r;
}

double RealAxisReconstruction::convexity(double x) const {
  const YState s = state(x);
  return 1.0 - 2.0 * x * s.yp / s.y;
}

RealAxisReconstruction reconstruct_f_from_y(const QFunction& q, double omega, double eps_end) {
  return RealAxisReconstruction(q, omega, eps_end);
}

}  // namespace gft
