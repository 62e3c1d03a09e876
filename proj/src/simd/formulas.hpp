#pragma once

// Per-element kernel formulas, templated on the lane type (double or an
// AVX2 vector wrapper). Both kernel translation units instantiate these, so
// the scalar and vector paths perform identical operations in identical
// order. Everything here has internal linkage on purpose: an AVX2-encoded
// instantiation must never be picked by the linker for the scalar path.

#include "gft/simd/kernels.hpp"

namespace gft::simd {
namespace {

template <class T>
struct Cx {
  T re, im;
};

template <class T>
inline Cx<T> add(Cx<T> a, Cx<T> b) {
  return {a.re + b.re, a.im + b.im};
}

template <class T>
inline Cx<T> sub(Cx<T> a, Cx<T> b) {
  return {a.re - b.re, a.im - b.im};
}

template <class T>
inline Cx<T> mul(Cx<T> a, Cx<T> b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class T>
inline Cx<T> scale(T s, Cx<T> a) {
  return {s * a.re, s * a.im};
}

template <class T>
inline Cx<T> div(Cx<T> a, Cx<T> b) {
  const T den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

template <class T>
inline void jet_add_elem(const Cx<T>* a, const Cx<T>* b, Cx<T>* c) {
  for (int k = 0; k < 4; ++k) c[k] = add(a[k], b[k]);
}

template <class T>
inline void jet_sub_elem(const Cx<T>* a, const Cx<T>* b, Cx<T>* c) {
  for (int k = 0; k < 4; ++k) c[k] = sub(a[k], b[k]);
}

template <class T>
inline void jet_mul_elem(const Cx<T>* a, const Cx<T>* b, Cx<T>* c) {
  const T two(2.0), three(3.0);
  c[0] = mul(a[0], b[0]);
  c[1] = add(mul(a[1], b[0]), mul(a[0], b[1]));
  c[2] = add(add(mul(a[2], b[0]), scale(two, mul(a[1], b[1]))), mul(a[0], b[2]));
  c[3] = add(add(mul(a[3], b[0]), scale(three, add(mul(a[2], b[1]), mul(a[1], b[2])))), mul(a[0], b[3]));
}

template <class T>
inline void jet_div_elem(const Cx<T>* a, const Cx<T>* b, Cx<T>* c) {
  const T two(2.0), three(3.0), one(1.0), zero(0.0);
  const Cx<T> inv = div(Cx<T>{one, zero}, b[0]);
  c[0] = mul(a[0], inv);
  c[1] = mul(sub(a[1], mul(c[0], b[1])), inv);
  c[2] = mul(sub(sub(a[2], scale(two, mul(c[1], b[1]))), mul(c[0], b[2])), inv);
  c[3] = mul(sub(sub(a[3], scale(three, add(mul(c[2], b[1]), mul(c[1], b[2])))), mul(c[0], b[3])), inv);
}

template <class T>
inline Cx<T> schwarzian_elem(const Cx<T>* f) {
  const T k(1.5);
  const Cx<T> r = div(f[2], f[1]);
  const Cx<T> q = div(f[3], f[1]);
  return sub(q, scale(k, mul(r, r)));
}

template <class T>
inline Cx<T> pre_schwarzian_elem(const Cx<T>* f) {
  return div(f[2], f[1]);
}

template <class T, class SqrtFn>
inline T weighted_modulus_elem(Cx<T> z, Cx<T> s, SqrtFn sqrt_fn) {
  const T w = T(1.0) - (z.re * z.re + z.im * z.im);
  return w * w * sqrt_fn(s.re * s.re + s.im * s.im);
}

template <class T>
inline T functional_elem(Functional fam, Cx<T> z, const Cx<T>* f) {
  const T one(1.0), two(2.0);
  switch (fam) {
    case Functional::C: return one + mul(z, div(f[2], f[1])).re;
    case Functional::BC: return T(0.0) - (one + mul(z, div(f[2], f[1])).re);
    case Functional::Sstar: return mul(z, div(f[1], f[0])).re;
    case Functional::BSstar: return T(0.0) - mul(z, div(f[1], f[0])).re;
    case Functional::BCI: {
      const T convex = one + mul(z, div(f[2], f[1])).re;
      return convex - two * mul(z, div(f[1], f[0])).re;
    }
  }
  return T(0.0);
}

}  // namespace
}  // namespace gft::simd
