#include "gft/palpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gft/error.hpp"
#include "gft/ode.hpp"
#include "golden.hpp"

namespace gft {

QFunction QFunction::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw Error(ErrorKind::NonnegativityViolated, "constant weight must be >= 0");
  QFunction q;
  q.kind_ = Kind::Constant;
  q.c_ = c;
  return q;
}

QFunction QFunction::expression(std::string_view text) { return expression(parse(text, 'x')); }

QFunction QFunction::expression(FunctionExpr e) {
  QFunction q;
  q.kind_ = Kind::Expression;
  q.expr_ = std::make_shared<const FunctionExpr>(std::move(e));
  return q;
}

QFunction QFunction::samples(std::vector<double> x, std::vector<double> q) {
  if (x.size() != q.size() || x.size() < 2 || x.front() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "sampled weight needs matching x and q with x[0] = 0");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw Error(ErrorKind::InvalidArgument, "sample abscissae must increase");
  }
  for (double v : q) {
    if (!(v >= 0.0)) throw Error(ErrorKind::NonnegativityViolated, "sampled weight has a negative value");
  }
  QFunction f;
  f.kind_ = Kind::Samples;
  f.xs_ = std::move(x);
  f.qs_ = std::move(q);
  return f;
}

QFunction QFunction::callable(std::function<double(double)> fn, std::string description) {
  QFunction q;
  q.kind_ = Kind::Callable;
  q.fn_ = std::move(fn);
  q.description_ = std::move(description);
  return q;
}

double QFunction::operator()(double x) const {
  double v = 0.0;
  switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::Expression: {
      const auto w = expr_->try_eval_value(cplx(x, 0.0));
      if (!w || std::abs(w->imag()) > 1e-9 * (1.0 + std::abs(w->real()))) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        throw Error(ErrorKind::EvaluationFailed, std::string("q is not real-valued at x = ") + buf);
      }
      v = w->real();
      break;
    }
    case Kind::Samples: {
      if (x >= xs_.back()) return qs_.back();
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
      const double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
      return qs_[i] + t * (qs_[i + 1] - qs_[i]);
    }
    case Kind::Callable: v = fn_(x); break;
  }
  if (std::isnan(v) || std::isinf(v)) throw Error(ErrorKind::EvaluationFailed, "q is not finite at x = " + std::to_string(x));
  if (v < 0.0) throw Error(ErrorKind::NonnegativityViolated, "q(" + std::to_string(x) + ") < 0");
  return v;
}

std::string QFunction::describe() const {
  switch (kind_) {
    case Kind::Constant: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.17g", c_);
      return buf;
    }
    case Kind::Expression: return expr_->print();
    case Kind::Samples: return "piecewise linear (" + std::to_string(xs_.size()) + " samples)";
    case Kind::Callable: return description_;
  }
  return {};
}

std::vector<double> ivp_nodes(double eps_end) {
  const double end = 1.0 - eps_end;
  std::vector<double> nodes;
  for (int i = 0; i <= kUniformNodes; ++i) nodes.push_back(end * i / kUniformNodes);
  for (int k = 1; k < 60; ++k) {
    const double x = 1.0 - std::ldexp(1.0, -k);
    if (x >= end) break;
    nodes.push_back(x);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

namespace {

OdeOptions ode_options(double rel_tol) {
  OdeOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = rel_tol * 1e-2;
  return opt;
}

auto make_rhs(const QFunction& q) {
  return [&q](double x, const std::array<double, 2>& s) { return std::array<double, 2>{s[1], -q(x) * s[0]}; };
}

}  // namespace

OdeSolution integrate_ivp(const QFunction& q, double eps_end, double rel_tol) {
  if (!(eps_end >= 1e-8 && eps_end <= 1e-2)) throw Error(ErrorKind::InvalidArgument, "eps_end must lie in [1e-8, 1e-2]");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-8)) throw Error(ErrorKind::InvalidArgument, "rel_tol must lie in (0, 1e-8]");
  OdeSolution sol;
  sol.eps_end = eps_end;
  sol.rel_tol = rel_tol;
  sol.nodes = ivp_nodes(eps_end);
  sol.y.resize(sol.nodes.size());
  sol.yp.resize(sol.nodes.size());
  const OdeStats stats = dopri5<double, 2>(make_rhs(q), 0.0, std::array<double, 2>{0.0, 1.0}, sol.nodes,
                                           ode_options(rel_tol), [&](std::size_t i, double, const auto& s) {
                                             sol.y[i] = s[0];
                                             sol.yp[i] = s[1];
                                           });
  sol.accepted_steps = stats.accepted;
  sol.rejected_steps = stats.rejected;
  sol.min_step = stats.min_step_taken;
  return sol;
}

YState state_at(const QFunction& q, const OdeSolution& sol, double x) {
  if (!(x >= 0.0 && x <= sol.nodes.back())) throw Error(ErrorKind::InvalidArgument, "x outside the solution range");
  const auto it = std::upper_bound(sol.nodes.begin(), sol.nodes.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - sol.nodes.begin()) - 1;
  if (sol.nodes[i] == x) return {sol.y[i], sol.yp[i]};
  YState out{};
  const double target[1] = {x};
  OdeOptions opt = ode_options(sol.rel_tol);
  opt.initial_step = std::min(opt.initial_step, x - sol.nodes[i]);
  dopri5<double, 2>(make_rhs(q), sol.nodes[i], std::array<double, 2>{sol.y[i], sol.yp[i]}, target, opt,
                    [&](std::size_t, double, const auto& s) { out = {s[0], s[1]}; });
  return out;
}

namespace {

/// Shrinks [lo, hi] with pred(lo) false and pred(hi) true to the given width
/// and returns the end where pred holds.
template <class Pred>
double bisect(double lo, double hi, double width, Pred pred) {
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<double> find_first_zero(const QFunction& q, const OdeSolution& sol) {
  auto y_nonpositive = [&](double x) { return state_at(q, sol, x).y <= 0.0; };
  for (std::size_t i = 1; i < sol.nodes.size(); ++i) {
    const double lo = sol.nodes[i - 1];
    if (sol.y[i] <= 0.0) return bisect(lo, sol.nodes[i], 1e-10, y_nonpositive);
    // While y > 0, y'' = -q y <= 0, so y' cannot turn from negative to
    // positive. If it does between two nodes, y dipped below zero there.
    if (i > 1 && sol.yp[i - 1] < 0.0 && sol.yp[i] > 0.0) {
      const double turn = bisect(lo, sol.nodes[i], 1e-13, [&](double x) { return state_at(q, sol, x).yp >= 0.0; });
      if (state_at(q, sol, turn).y <= 0.0) return bisect(lo, turn, 1e-10, y_nonpositive);
    }
  }
  return std::nullopt;
}

}  // namespace

PalphaVerdict check_palpha(const QFunction& q, double alpha, double tol, double eps_end) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [0,1]");
  const OdeSolution sol = integrate_ivp(q, eps_end);
  PalphaVerdict v;
  v.alpha = alpha;
  v.tolerance = tol;
  v.first_zero = find_first_zero(q, sol);
  v.positive_on_01 = !v.first_zero;
  if (!v.positive_on_01) {
    v.limit_estimate = NAN;
    v.member = false;
    return v;
  }

  const int k_last = std::min(kLastTailIndex, static_cast<int>(std::floor(std::log2(1.0 / eps_end))));
  const int k_first = std::min(kFirstTailIndex, k_last - 3);
  for (int k = k_first; k <= k_last; ++k) {
    const double x = 1.0 - std::ldexp(1.0, -k);
    const YState s = state_at(q, sol, x);
    v.tail_x.push_back(x);
    v.tail_ratio.push_back(s.yp / s.y);
  }
  // y'/y is smooth in h = 1 - x when q is; halving h cancels the linear term.
  for (std::size_t i = 0; i + 1 < v.tail_ratio.size(); ++i) {
    v.extrapolants.push_back(2.0 * v.tail_ratio[i + 1] - v.tail_ratio[i]);
  }
  const std::size_t m = v.extrapolants.size();
  const auto last3 = std::minmax({v.extrapolants[m - 1], v.extrapolants[m - 2], v.extrapolants[m - 3]});
  if (!(last3.second - last3.first <= kExtrapolationAgreement)) {
    throw ExtrapolationError(v.tail_x, v.tail_ratio, "y'/y does not settle as x -> 1");
  }
  v.limit_estimate = v.extrapolants.back();
  v.member = v.member_at(alpha, tol);
  return v;
}

IntegralCriterion integral_criterion(const QFunction& q, double c) {
  if (!(c <= 1.0)) throw Error(ErrorKind::InvalidArgument, "the integral bound c must be <= 1");
  IntegralCriterion out;
  out.c = c;
  switch (q.kind()) {
    case QFunction::Kind::Constant: out.integral = q(0.0); break;
    case QFunction::Kind::Samples: {
      const auto& x = q.sample_x();
      const auto& v = q.sample_q();
      double sum = 0.0;
      for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (v[i] + v[i - 1]) * (x[i] - x[i - 1]);
      if (x.back() < 1.0) sum += v.back() * (1.0 - x.back());
      out.integral = sum;
      break;
    }
    default: {
      boost::math::quadrature::tanh_sinh<double> ts;
      double err = 0.0;
      out.integral = ts.integrate([&](double x) { return x >= 1.0 ? 0.0 : q(x); }, 0.0, 1.0, 1e-13, &err);
      out.error_estimate = err;
      if (!std::isfinite(out.integral) || err > 1e-10 * std::max(1.0, std::abs(out.integral))) {
        throw Error(ErrorKind::QuadratureFailed, "error estimate " + std::to_string(err) + " above 1e-10");
      }
    }
  }
  out.holds = out.integral <= c + 1e-10;
  return out;
}

ConstantSolution constant_solver(double target_limit) {
  if (!(target_limit > 0.0 && target_limit < 1.0)) {
    throw Error(ErrorKind::TargetOutOfRange, "t cot t only takes values in (0, 1) on (0, pi/2)");
  }
  auto g = [&](double t) { return t / std::tan(t) - target_limit; };
  double lo = 0.0, hi = std::numbers::pi / 2;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = (lo > 0.0 && std::abs(g(lo)) < std::abs(g(hi))) ? lo : hi;
  return {target_limit, t, t * t, std::abs(g(t))};
}

QFunction sharpness_weight(int n, double beta) {
  if (n < 1 || !(beta >= 0.0 && beta < 1.0)) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and beta in [0,1)");
  const double k = (1.0 - beta) * (n + 1);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g*x^%d", k, n);
  return QFunction::callable([k, n](double x) { return k * std::pow(x, n); }, buf);
}

SharpnessResult sharpness_construct(int n, double beta, double eps_end) {
  const QFunction q = sharpness_weight(n, beta);
  const OdeSolution sol = integrate_ivp(q, eps_end);
  auto ratio = [&](double x) {
    const YState s = state_at(q, sol, x);
    if (s.y <= 0.0) throw Error(ErrorKind::YVanishes, "y vanishes at x = " + std::to_string(x));
    return x * s.yp / s.y;
  };
  SharpnessResult out;
  out.n = n;
  out.beta = beta;
  out.min_ratio = 1.0;  // limit at x = 0
  std::size_t i_min = 0;
  for (std::size_t i = 1; i < sol.nodes.size(); ++i) {
    if (sol.y[i] <= 0.0) throw Error(ErrorKind::YVanishes, "y vanishes before 1 - eps_end");
    const double r = sol.nodes[i] * sol.yp[i] / sol.y[i];
    if (r < out.min_ratio) {
      out.min_ratio = r;
      i_min = i;
    }
    if (!out.x0 && r <= beta) {
      out.x0 = bisect(sol.nodes[i - 1], sol.nodes[i], 1e-12, [&](double x) { return ratio(x) <= beta; });
      out.ratio_at_x0 = ratio(*out.x0);
      out.convexity_value = 1.0 - 2.0 * *out.ratio_at_x0;
    }
  }
  out.min_ratio_at = sol.nodes[i_min];
  if (i_min > 0) {
    const double lo = sol.nodes[i_min - 1];
    const double hi = sol.nodes[std::min(i_min + 1, sol.nodes.size() - 1)];
    const auto refined = detail::golden_minimize(ratio, lo, hi, 80);
    if (refined.value < out.min_ratio) {
      out.min_ratio = refined.value;
      out.min_ratio_at = refined.x;
    }
  }
  return out;
}

}  // namespace gft
