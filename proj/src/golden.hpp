#pragma once

#include <cmath>
#include <functional>

namespace gft::detail {

struct GoldenResult {
  double x;
  double value;
};

/// Golden-section search for a maximum of fn on [a, b]. fn may return NaN at
/// points it cannot evaluate; those compare as -inf. The best point seen,
/// including both endpoints, is returned.
inline GoldenResult golden_maximize(const std::function<double(double)>& fn, double a, double b, int iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto eval = [&](double x) {
    const double v = fn(x);
    return std::isnan(v) ? -INFINITY : v;
  };
  GoldenResult best{a, eval(a)};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(b, eval(b));
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c), fd = eval(d);
  consider(c, fc);
  consider(d, fd);
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
      consider(d, fd);
    }
  }
  return best;
}

inline GoldenResult golden_minimize(const std::function<double(double)>& fn, double a, double b, int iters) {
  const GoldenResult r = golden_maximize([&](double x) { return -fn(x); }, a, b, iters);
  return {r.x, -r.value};
}

}  // namespace gft::detail
