#include "gft/jet.hpp"

#include <cmath>
#include <string>

#include "gft/error.hpp"

namespace gft {

namespace {

bool tiny(cplx c) { return std::abs(c) < kSingularityThreshold; }

[[noreturn]] void raise(JetStatus status, const char* where) {
  if (status == JetStatus::DivisionAtZero) {
    throw Error(ErrorKind::DivisionAtZero, std::string(where) + ": denominator below singularity threshold");
  }
  throw Error(ErrorKind::BranchPointOrPole, std::string(where) + ": argument at a branch point or pole");
}

const char* name_of(JetFn fn) {
  switch (fn) {
    case JetFn::Exp: return "exp";
    case JetFn::Log: return "log";
    case JetFn::Sin: return "sin";
    case JetFn::Cos: return "cos";
    case JetFn::Tan: return "tan";
    case JetFn::Cot: return "cot";
    case JetFn::Sqrt: return "sqrt";
  }
  return "?";
}

// z^n for integer n >= 0 by repeated squaring; exact for small n.
cplx ipow(cplx z, long n) {
  cplx result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

}  // namespace

Jet3& Jet3::operator+=(const Jet3& o) {
  v0 += o.v0;
  v1 += o.v1;
  v2 += o.v2;
  v3 += o.v3;
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& o) {
  v0 -= o.v0;
  v1 -= o.v1;
  v2 -= o.v2;
  v3 -= o.v3;
  return *this;
}

Jet3& Jet3::operator*=(const Jet3& o) { return *this = *this * o; }
Jet3& Jet3::operator/=(const Jet3& o) { return *this = *this / o; }

Jet3 operator-(const Jet3& a) { return {-a.v0, -a.v1, -a.v2, -a.v3}; }

Jet3 operator+(const Jet3& a, const Jet3& b) {
  Jet3 r = a;
  return r += b;
}

Jet3 operator-(const Jet3& a, const Jet3& b) {
  Jet3 r = a;
  return r -= b;
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.v0 * b.v0,
          a.v1 * b.v0 + a.v0 * b.v1,
          a.v2 * b.v0 + 2.0 * a.v1 * b.v1 + a.v0 * b.v2,
          a.v3 * b.v0 + 3.0 * (a.v2 * b.v1 + a.v1 * b.v2) + a.v0 * b.v3};
}

Jet3 try_divide(const Jet3& a, const Jet3& b, JetStatus& status) noexcept {
  if (tiny(b.v0)) {
    status = JetStatus::DivisionAtZero;
    return {};
  }
  // Solve a = c * b order by order.
  const cplx inv = 1.0 / b.v0;
  Jet3 c;
  c.v0 = a.v0 * inv;
  c.v1 = (a.v1 - c.v0 * b.v1) * inv;
  c.v2 = (a.v2 - 2.0 * c.v1 * b.v1 - c.v0 * b.v2) * inv;
  c.v3 = (a.v3 - 3.0 * (c.v2 * b.v1 + c.v1 * b.v2) - c.v0 * b.v3) * inv;
  status = JetStatus::Ok;
  return c;
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
  JetStatus status = JetStatus::Ok;
  Jet3 c = try_divide(a, b, status);
  if (status != JetStatus::Ok) raise(status, "jet division");
  return c;
}

Jet3 operator*(cplx s, const Jet3& a) { return {s * a.v0, s * a.v1, s * a.v2, s * a.v3}; }
Jet3 operator*(const Jet3& a, cplx s) { return s * a; }
Jet3 operator+(const Jet3& a, cplx s) { return {a.v0 + s, a.v1, a.v2, a.v3}; }
Jet3 operator+(cplx s, const Jet3& a) { return a + s; }
Jet3 operator-(const Jet3& a, cplx s) { return {a.v0 - s, a.v1, a.v2, a.v3}; }
Jet3 operator-(cplx s, const Jet3& a) { return {s - a.v0, -a.v1, -a.v2, -a.v3}; }
Jet3 operator/(cplx s, const Jet3& a) { return Jet3::constant(s) / a; }

Jet3 compose(const std::array<cplx, 4>& g, const Jet3& a) noexcept {
  const cplx a1sq = a.v1 * a.v1;
  return {g[0],
          g[1] * a.v1,
          g[2] * a1sq + g[1] * a.v2,
          g[3] * a1sq * a.v1 + 3.0 * g[2] * a.v1 * a.v2 + g[1] * a.v3};
}

Jet3 try_apply(JetFn fn, const Jet3& a, JetStatus& status) noexcept {
  status = JetStatus::Ok;
  const cplx x = a.v0;
  std::array<cplx, 4> g;
  switch (fn) {
    case JetFn::Exp: {
      const cplx e = std::exp(x);
      g = {e, e, e, e};
      break;
    }
    case JetFn::Log: {
      if (tiny(x)) {
        status = JetStatus::BranchPointOrPole;
        return {};
      }
      const cplx r = 1.0 / x;
      g = {std::log(x), r, -r * r, 2.0 * r * r * r};
      break;
    }
    case JetFn::Sin: {
      const cplx s = std::sin(x), c = std::cos(x);
      g = {s, c, -s, -c};
      break;
    }
    case JetFn::Cos: {
      const cplx s = std::sin(x), c = std::cos(x);
      g = {c, -s, -c, s};
      break;
    }
    case JetFn::Tan: {
      const cplx c = std::cos(x);
      if (tiny(c)) {
        status = JetStatus::BranchPointOrPole;
        return {};
      }
      const cplx t = std::sin(x) / c;
      const cplx d1 = 1.0 + t * t;
      const cplx d2 = 2.0 * t * d1;
      g = {t, d1, d2, 2.0 * (d1 * d1 + t * d2)};
      break;
    }
    case JetFn::Cot: {
      const cplx s = std::sin(x);
      if (tiny(s)) {
        status = JetStatus::BranchPointOrPole;
        return {};
      }
      const cplx k = std::cos(x) / s;
      const cplx d1 = -(1.0 + k * k);
      const cplx d2 = -2.0 * k * d1;
      g = {k, d1, d2, -2.0 * (d1 * d1 + k * d2)};
      break;
    }
    case JetFn::Sqrt: {
      if (tiny(x)) {
        status = JetStatus::BranchPointOrPole;
        return {};
      }
      const cplx s = std::sqrt(x);
      const cplx inv = 1.0 / s;
      const cplx inv_x = 1.0 / x;
      g = {s, 0.5 * inv, -0.25 * inv * inv_x, 0.375 * inv * inv_x * inv_x};
      break;
    }
  }
  return compose(g, a);
}

Jet3 apply(JetFn fn, const Jet3& a) {
  JetStatus status = JetStatus::Ok;
  Jet3 r = try_apply(fn, a, status);
  if (status != JetStatus::Ok) raise(status, name_of(fn));
  return r;
}

Jet3 try_pow(const Jet3& a, double exponent, JetStatus& status) noexcept {
  status = JetStatus::Ok;
  const cplx x = a.v0;
  std::array<cplx, 4> g;
  const double c = exponent;
  if (c == std::floor(c) && std::abs(c) <= 64.0) {
    long n = static_cast<long>(c);
    if (n < 0 && tiny(x)) {
      status = JetStatus::BranchPointOrPole;
      return {};
    }
    // Integer powers are entire (or meromorphic): no branch cut, and the
    // falling-factorial coefficient vanishes exactly where x^(n-k) would
    // otherwise be evaluated at a negative power of zero.
    double coeff = 1.0;
    for (int k = 0; k < 4; ++k) {
      const long m = n - k;
      if (coeff == 0.0) {
        g[k] = 0.0;
      } else if (m >= 0) {
        g[k] = coeff * ipow(x, m);
      } else {
        g[k] = coeff / ipow(x, -m);
      }
      coeff *= static_cast<double>(n - k);
    }
    return compose(g, a);
  }
  if (tiny(x)) {
    status = JetStatus::BranchPointOrPole;
    return {};
  }
  const cplx p = std::pow(x, c);
  const cplx inv = 1.0 / x;
  g = {p, c * p * inv, c * (c - 1.0) * p * inv * inv, c * (c - 1.0) * (c - 2.0) * p * inv * inv * inv};
  return compose(g, a);
}

Jet3 pow(const Jet3& a, double exponent) {
  JetStatus status = JetStatus::Ok;
  Jet3 r = try_pow(a, exponent, status);
  if (status != JetStatus::Ok) raise(status, "pow");
  return r;
}

}  // namespace gft
