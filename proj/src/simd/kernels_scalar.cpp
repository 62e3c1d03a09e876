#include <cmath>

#include "formulas.hpp"

namespace gft::simd {

namespace {

using D = Cx<double>;

inline void load(ConstJetPlanes p, std::size_t i, D* out) {
  for (int k = 0; k < 4; ++k) out[k] = {p.re[k][i], p.im[k][i]};
}

inline void store(JetPlanes p, std::size_t i, const D* v) {
  for (int k = 0; k < 4; ++k) {
    p.re[k][i] = v[k].re;
    p.im[k][i] = v[k].im;
  }
}

template <void (*Elem)(const D*, const D*, D*)>
void binary(ConstJetPlanes a, ConstJetPlanes b, JetPlanes out, std::size_t n) {
  D x[4], y[4], z[4];
  for (std::size_t i = 0; i < n; ++i) {
    load(a, i, x);
    load(b, i, y);
    Elem(x, y, z);
    store(out, i, z);
  }
}

void schwarzian(ConstJetPlanes f, double* s_re, double* s_im, std::size_t n) {
  D x[4];
  for (std::size_t i = 0; i < n; ++i) {
    load(f, i, x);
    const D s = schwarzian_elem(x);
    s_re[i] = s.re;
    s_im[i] = s.im;
  }
}

void pre_schwarzian(ConstJetPlanes f, double* o_re, double* o_im, std::size_t n) {
  D x[4];
  for (std::size_t i = 0; i < n; ++i) {
    load(f, i, x);
    const D r = pre_schwarzian_elem(x);
    o_re[i] = r.re;
    o_im[i] = r.im;
  }
}

void weighted_modulus(const double* z_re, const double* z_im, const double* s_re, const double* s_im, double* out,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = weighted_modulus_elem(D{z_re[i], z_im[i]}, D{s_re[i], s_im[i]}, [](double v) { return std::sqrt(v); });
  }
}

void functional(Functional fam, const double* z_re, const double* z_im, ConstJetPlanes f, double* out,
                std::size_t n) {
  D x[4];
  for (std::size_t i = 0; i < n; ++i) {
    load(f, i, x);
    out[i] = functional_elem(fam, D{z_re[i], z_im[i]}, x);
  }
}

constexpr KernelTable kScalar{
    "scalar",
    &binary<&jet_add_elem<double>>,
    &binary<&jet_sub_elem<double>>,
    &binary<&jet_mul_elem<double>>,
    &binary<&jet_div_elem<double>>,
    &schwarzian,
    &pre_schwarzian,
    &weighted_modulus,
    &functional,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace gft::simd
