#pragma once

// Reference computations that share no code with the library: derivatives
// from finite differences or Cauchy integrals of plain std::complex
// functions, and mpmath-computed constants frozen to 40 digits.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;
using Fn = std::function<cplx(cplx)>;

/// Central differences along the real direction: fourth order in h for f'
/// and f'', sixth order for f''' via one Richardson step.
inline std::array<cplx, 4> central_differences(const Fn& f, cplx z) {
  std::array<cplx, 4> d{};
  d[0] = f(z);
  {
    const double h = 1e-3;
    d[1] = (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
  }
  {
    const double h = 2e-3;
    d[2] = (-f(z + 2.0 * h) + 16.0 * f(z + h) - 30.0 * d[0] + 16.0 * f(z - h) - f(z - 2.0 * h)) / (12.0 * h * h);
  }
  {
    // Fourth-order stencil at h and h/2 combined by Richardson: sixth order.
    auto third = [&](double h) {
      return (-f(z + 3.0 * h) + 8.0 * f(z + 2.0 * h) - 13.0 * f(z + h) + 13.0 * f(z - h) - 8.0 * f(z - 2.0 * h) +
              f(z - 3.0 * h)) /
             (8.0 * h * h * h);
    };
    const cplx coarse = third(1e-2), fine = third(5e-3);
    d[3] = fine + (fine - coarse) / 15.0;
  }
  return d;
}

/// f^(k)(z) = k!/(2 pi i) \oint f(w)/(w - z)^(k+1) dw on a circle of radius r,
/// with the trapezoid rule (spectrally accurate for analytic f).
inline std::array<cplx, 4> cauchy_derivatives(const Fn& f, cplx z, double r, int n = 128) {
  std::array<cplx, 4> d{};
  for (int j = 0; j < n; ++j) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    const cplx v = f(z + r * w);
    cplx wk = 1.0;
    for (int k = 0; k < 4; ++k) {
      d[k] += v / wk;
      wk *= w;
    }
  }
  const double fact[4] = {1, 1, 2, 6};
  for (int k = 0; k < 4; ++k) d[k] *= fact[k] / (n * std::pow(r, k));
  return d;
}

inline cplx schwarzian_from(const std::array<cplx, 4>& d) {
  const cplx r = d[2] / d[1];
  return d[3] / d[1] - 1.5 * r * r;
}

// mpmath, 40 significant digits.
inline constexpr long double kConstT = 1.165561185207211306833917977958560669135L;   // t cot t = 1/2
inline constexpr long double kConstC = 1.358532876461639137720416598844187812136L;   // t^2
inline constexpr long double kR0 = 0.2679491924311227064725536584941276330572L;      // 2 - sqrt(3)
inline constexpr long double kRHalf = 0.1314829081786702356269262441765013512496L;   // r_alpha at 1/2
inline constexpr long double kTwoOverPi = 0.6366197723675813430755350534900574481378L;
inline constexpr long double kCot03 = 3.232728143765827513713920534512579796123L;

}  // namespace oracle
