// AVX2 variants. Compiled with -mavx2 (and deliberately without -mfma).

#include <immintrin.h>

#include "formulas.hpp"

namespace gft::simd {

namespace {

struct V {
  __m256d v;
  V() = default;
  V(double d) : v(_mm256_set1_pd(d)) {}
  V(__m256d x) : v(x) {}
};

inline V operator+(V a, V b) { return _mm256_add_pd(a.v, b.v); }
inline V operator-(V a, V b) { return _mm256_sub_pd(a.v, b.v); }
inline V operator*(V a, V b) { return _mm256_mul_pd(a.v, b.v); }
inline V operator/(V a, V b) { return _mm256_div_pd(a.v, b.v); }

constexpr std::size_t kLanes = 4;

using D = Cx<double>;
using W = Cx<V>;

inline V ld(const double* p) { return _mm256_loadu_pd(p); }
inline void st(double* p, V x) { _mm256_storeu_pd(p, x.v); }

template <class T>
inline void load(ConstJetPlanes p, std::size_t i, Cx<T>* out);

template <>
inline void load<V>(ConstJetPlanes p, std::size_t i, W* out) {
  for (int k = 0; k < 4; ++k) out[k] = {ld(p.re[k] + i), ld(p.im[k] + i)};
}

template <>
inline void load<double>(ConstJetPlanes p, std::size_t i, D* out) {
  for (int k = 0; k < 4; ++k) out[k] = {p.re[k][i], p.im[k][i]};
}

inline void store(JetPlanes p, std::size_t i, const W* v) {
  for (int k = 0; k < 4; ++k) {
    st(p.re[k] + i, v[k].re);
    st(p.im[k] + i, v[k].im);
  }
}

inline void store(JetPlanes p, std::size_t i, const D* v) {
  for (int k = 0; k < 4; ++k) {
    p.re[k][i] = v[k].re;
    p.im[k][i] = v[k].im;
  }
}

template <void (*ElemV)(const W*, const W*, W*), void (*ElemD)(const D*, const D*, D*)>
void binary(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    W x[4], y[4], z[4];
    load<V>(a, i, x);
    load<V>(b, i, y);
    ElemV(x, y, z);
    store(out, i, z);
  }
  for (; i < n; ++i) {
    D x[4], y[4], z[4];
    load<double>(a, i, x);
    load<double>(b, i, y);
    ElemD(x, y, z);
    store(out, i, z);
  }
}

void schwarzian(ConstJetPlanes f, double* s_re, double* s_im, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    W x[4];
    load<V>(f, i, x);
    const W s = schwarzian_elem(x);
    st(s_re + i, s.re);
    st(s_im + i, s.im);
  }
  for (; i < n; ++i) {
    D x[4];
    load<double>(f, i, x);
    const D s = schwarzian_elem(x);
    s_re[i] = s.re;
    s_im[i] = s.im;
  }
}

void pre_schwarzian(ConstJetPlanes f, double* o_re, double* o_im, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    W x[4];
    load<V>(f, i, x);
    const W r = pre_schwarzian_elem(x);
    st(o_re + i, r.re);
    st(o_im + i, r.im);
  }
  for (; i < n; ++i) {
    D x[4];
    load<double>(f, i, x);
    const D r = pre_schwarzian_elem(x);
    o_re[i] = r.re;
    o_im[i] = r.im;
  }
}

void weighted_modulus(const double* z_re, const double* z_im, const double* s_re, const double* s_im, double* out,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const V w = weighted_modulus_elem(W{ld(z_re + i), ld(z_im + i)}, W{ld(s_re + i), ld(s_im + i)},
                                      [](V x) { return V(_mm256_sqrt_pd(x.v)); });
    st(out + i, w);
  }
  for (; i < n; ++i) {
    out[i] = weighted_modulus_elem(D{z_re[i], z_im[i]}, D{s_re[i], s_im[i]},
                                   [](double x) { return _mm_cvtsd_f64(_mm_sqrt_sd(_mm_setzero_pd(), _mm_set_sd(x))); });
  }
}

void functional(Functional fam, const double* z_re, const double* z_im, ConstJetPlanes f, double* out,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    W x[4];
    load<V>(f, i, x);
    st(out + i, functional_elem(fam, W{ld(z_re + i), ld(z_im + i)}, x));
  }
  for (; i < n; ++i) {
    D x[4];
    load<double>(f, i, x);
    out[i] = functional_elem(fam, D{z_re[i], z_im[i]}, x);
  }
}

constexpr KernelTable kAvx2{
    "avx2",
    &binary<&jet_add_elem<V>, &jet_add_elem<double>>,
    &binary<&jet_sub_elem<V>, &jet_sub_elem<double>>,
    &binary<&jet_mul_elem<V>, &jet_mul_elem<double>>,
    &binary<&jet_div_elem<V>, &jet_div_elem<double>>,
    &schwarzian,
    &pre_schwarzian,
    &weighted_modulus,
    &functional,
};

}  // namespace

// Returns a pointer to static data only; safe to call on any CPU.
const KernelTable* avx2_table() noexcept { return &kAvx2; }

}  // namespace gft::simd
