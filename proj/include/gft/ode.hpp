#pragma once

// Dormand-Prince 5(4) with embedded error control, for small fixed-size
// systems over double or complex<double>. Steps are clamped so every
// requested output node is hit exactly.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>

#include "gft/error.hpp"

namespace gft {

struct OdeOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  double initial_step = 1e-4;
  double min_step = 1e-15;
  std::size_t max_steps = 2'000'000;
};

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double min_step_taken = INFINITY;
};

/// rhs(t, y) -> dy/dt; observer(i, t, y) is called at each output node.
/// outputs must be increasing and start at or after t0.
template <class T, std::size_t N, class Rhs, class Observer>
OdeStats dopri5(Rhs&& rhs, double t0, std::array<T, N> y, std::span<const double> outputs, const OdeOptions& opt,
                Observer&& observer) {
  using State = std::array<T, N>;
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto comb = [](const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = base;
    for (std::size_t n = 0; n < N; ++n) {
      T acc{};
      for (const auto& [c, k] : terms) acc += c * (*k)[n];
      out[n] += h * acc;
    }
    return out;
  };

  OdeStats stats;
  double t = t0;
  double h = opt.initial_step;
  State k1 = rhs(t, y);
  std::size_t out_i = 0;
  while (out_i < outputs.size() && outputs[out_i] <= t) observer(out_i++, t, y);

  while (out_i < outputs.size()) {
    const double target = outputs[out_i];
    bool hit = false;
    double step = h;
    if (t + step >= target) {
      step = target - t;
      hit = true;
    }
    if (step < opt.min_step * std::max(1.0, std::abs(t))) {
      throw Error(ErrorKind::StepSizeUnderflow, "step size underflow at t = " + std::to_string(t));
    }
    if (stats.accepted + stats.rejected >= opt.max_steps) {
      throw Error(ErrorKind::StepSizeUnderflow, "step budget exhausted at t = " + std::to_string(t));
    }
    const State k2 = rhs(t + c2 * step, comb(y, step, {{a21, &k1}}));
    const State k3 = rhs(t + c3 * step, comb(y, step, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(t + c4 * step, comb(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(t + c5 * step, comb(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        rhs(t + step, comb(y, step, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = comb(y, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double t_new = hit ? target : t + step;
    const State k7 = rhs(t_new, y_new);

    double err = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      const T e = step * (e1 * k1[n] + e3 * k3[n] + e4 * k4[n] + e5 * k5[n] + e6 * k6[n] + e7 * k7[n]);
      const double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[n]), std::abs(y_new[n]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (!std::isfinite(err)) err = 1e10;

    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    if (err <= 1.0) {
      ++stats.accepted;
      stats.min_step_taken = std::min(stats.min_step_taken, step);
      t = t_new;
      y = y_new;
      k1 = k7;
      if (hit) {
        observer(out_i++, t, y);
        while (out_i < outputs.size() && outputs[out_i] <= t) observer(out_i++, t, y);
        // A step shortened to land on a node says little about the natural step.
        h = std::max(h, step * factor);
      } else {
        h = step * factor;
      }
    } else {
      ++stats.rejected;
      h = step * std::max(0.2, factor);
    }
  }
  return stats;
}

}  // namespace gft
