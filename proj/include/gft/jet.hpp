#pragma once

// Order-3 complex Taylor jets.
//
// A Jet3 carries (f, f', f'', f''') at a point. Arithmetic follows the
// Leibniz rule and elementary functions the order-3 Faa di Bruno formula,
// so derivatives are exact up to rounding. log, sqrt and non-integer powers
// use the principal branch; the cut lies along the negative real axis of
// their argument.

#include <array>
#include <complex>

namespace gft {

using cplx = std::complex<double>;

/// |denominator| below this raises DivisionAtZero; |argument| below it at a
/// branch point or pole raises BranchPointOrPole.
inline constexpr double kSingularityThreshold = 1e-13;

struct Jet3 {
  cplx v0{};  // value
  cplx v1{};  // first derivative
  cplx v2{};
  cplx v3{};

  static constexpr Jet3 constant(cplx c) { return {c, 0.0, 0.0, 0.0}; }

  constexpr cplx operator[](int k) const {
    switch (k) {
      case 0: return v0;
      case 1: return v1;
      case 2: return v2;
      default: return v3;
    }
  }

  Jet3& operator+=(const Jet3& o);
  Jet3& operator-=(const Jet3& o);
  Jet3& operator*=(const Jet3& o);
  Jet3& operator/=(const Jet3& o);
};

/// The jet of the identity map at z0.
constexpr Jet3 seed_variable(cplx z0) { return {z0, 1.0, 0.0, 0.0}; }

Jet3 operator-(const Jet3& a);
Jet3 operator+(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a, const Jet3& b);
Jet3 operator*(const Jet3& a, const Jet3& b);
Jet3 operator/(const Jet3& a, const Jet3& b);
Jet3 operator*(cplx s, const Jet3& a);
Jet3 operator*(const Jet3& a, cplx s);
Jet3 operator+(const Jet3& a, cplx s);
Jet3 operator+(cplx s, const Jet3& a);
Jet3 operator-(const Jet3& a, cplx s);
Jet3 operator-(cplx s, const Jet3& a);
Jet3 operator/(cplx s, const Jet3& a);

enum class JetFn { Exp, Log, Sin, Cos, Tan, Cot, Sqrt };

enum class JetStatus { Ok, DivisionAtZero, BranchPointOrPole };

// Non-throwing cores, used by the batch evaluator where a failing sample is
// recorded rather than raised.
Jet3 try_divide(const Jet3& a, const Jet3& b, JetStatus& status) noexcept;
Jet3 try_apply(JetFn fn, const Jet3& a, JetStatus& status) noexcept;
Jet3 try_pow(const Jet3& a, double exponent, JetStatus& status) noexcept;

Jet3 apply(JetFn fn, const Jet3& a);
Jet3 pow(const Jet3& a, double exponent);

inline Jet3 exp(const Jet3& a) { return apply(JetFn::Exp, a); }
inline Jet3 log(const Jet3& a) { return apply(JetFn::Log, a); }
inline Jet3 sin(const Jet3& a) { return apply(JetFn::Sin, a); }
inline Jet3 cos(const Jet3& a) { return apply(JetFn::Cos, a); }
inline Jet3 tan(const Jet3& a) { return apply(JetFn::Tan, a); }
inline Jet3 cot(const Jet3& a) { return apply(JetFn::Cot, a); }
inline Jet3 sqrt(const Jet3& a) { return apply(JetFn::Sqrt, a); }

/// Chain rule: given g, g', g'', g''' at a.v0, returns the jet of g(a).
Jet3 compose(const std::array<cplx, 4>& outer, const Jet3& a) noexcept;

}  // namespace gft
