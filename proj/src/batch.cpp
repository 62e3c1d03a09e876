#include "gft/batch.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "gft/parallel.hpp"

namespace gft {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void JetBatch::resize(std::size_t n) {
  n_ = n;
  for (int k = 0; k < 4; ++k) {
    re_[k].resize(n);
    im_[k].resize(n);
  }
}

simd::JetPlanes JetBatch::planes() noexcept {
  simd::JetPlanes p{};
  for (int k = 0; k < 4; ++k) {
    p.re[k] = re_[k].data();
    p.im[k] = im_[k].data();
  }
  return p;
}

simd::ConstJetPlanes JetBatch::planes() const noexcept {
  simd::ConstJetPlanes p{};
  for (int k = 0; k < 4; ++k) {
    p.re[k] = re_[k].data();
    p.im[k] = im_[k].data();
  }
  return p;
}

Jet3 JetBatch::get(std::size_t i) const noexcept {
  return {{re_[0][i], im_[0][i]}, {re_[1][i], im_[1][i]}, {re_[2][i], im_[2][i]}, {re_[3][i], im_[3][i]}};
}

void JetBatch::set(std::size_t i, const Jet3& j) noexcept {
  for (int k = 0; k < 4; ++k) {
    re_[k][i] = j[k].real();
    im_[k][i] = j[k].imag();
  }
}

BatchEvaluator::BatchEvaluator(FunctionExpr expr, const simd::KernelTable& kernels)
    : expr_(std::move(expr)), kernels_(&kernels) {}

void BatchEvaluator::evaluate(std::span<const cplx> z, JetBatch& out, std::vector<std::uint8_t>& ok) {
  const std::size_t n = z.size();
  ok.assign(n, 1);
  const auto& prog = expr_.program();
  if (stack_.size() < prog.size()) stack_.resize(prog.size());
  std::size_t sp = 0;
  auto const_view = [](const JetBatch& b) { return b.planes(); };

  for (const Instr& ins : prog) {
    switch (ins.kind) {
      case NodeKind::Const: {
        JetBatch& t = stack_[sp++];
        t.resize(n);
        for (std::size_t i = 0; i < n; ++i) t.set(i, Jet3::constant(ins.value));
        break;
      }
      case NodeKind::Var: {
        JetBatch& t = stack_[sp++];
        t.resize(n);
        for (std::size_t i = 0; i < n; ++i) t.set(i, seed_variable(z[i]));
        break;
      }
      case NodeKind::Neg: {
        auto p = stack_[sp - 1].planes();
        for (int k = 0; k < 4; ++k) {
          for (std::size_t i = 0; i < n; ++i) {
            p.re[k][i] = -p.re[k][i];
            p.im[k][i] = -p.im[k][i];
          }
        }
        break;
      }
      case NodeKind::Add:
      case NodeKind::Sub:
      case NodeKind::Mul:
      case NodeKind::Div: {
        --sp;
        JetBatch& a = stack_[sp - 1];
        const JetBatch& b = stack_[sp];
        if (ins.kind == NodeKind::Div) {
          const double* b0r = b.re(0);
          const double* b0i = b.im(0);
          for (std::size_t i = 0; i < n; ++i) {
            if (std::hypot(b0r[i], b0i[i]) < kSingularityThreshold) ok[i] = 0;
          }
        }
        const auto ca = const_view(std::as_const(a));
        const auto cb = const_view(b);
        switch (ins.kind) {
          case NodeKind::Add: kernels_->jet_add(ca, cb, a.planes(), n); break;
          case NodeKind::Sub: kernels_->jet_sub(ca, cb, a.planes(), n); break;
          case NodeKind::Mul: kernels_->jet_mul(ca, cb, a.planes(), n); break;
          default: kernels_->jet_div(ca, cb, a.planes(), n); break;
        }
        break;
      }
      case NodeKind::Pow:
      case NodeKind::Func: {
        JetBatch& t = stack_[sp - 1];
        for (std::size_t i = 0; i < n; ++i) {
          if (!ok[i]) continue;
          JetStatus status = JetStatus::Ok;
          const Jet3 r = ins.kind == NodeKind::Pow ? try_pow(t.get(i), ins.exponent, status)
                                                   : try_apply(ins.fn, t.get(i), status);
          if (status != JetStatus::Ok) {
            ok[i] = 0;
          } else {
            t.set(i, r);
          }
        }
        break;
      }
    }
  }
  out = stack_[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (!ok[i]) continue;
    const Jet3 j = out.get(i);
    for (int k = 0; k < 4; ++k) {
      if (!std::isfinite(j[k].real()) || !std::isfinite(j[k].imag())) {
        ok[i] = 0;
        break;
      }
    }
  }
}

simd::Functional to_functional(Family f) noexcept {
  switch (f) {
    case Family::C: return simd::Functional::C;
    case Family::Sstar: return simd::Functional::Sstar;
    case Family::BC: return simd::Functional::BC;
    case Family::BSstar: return simd::Functional::BSstar;
    case Family::BCI: return simd::Functional::BCI;
  }
  return simd::Functional::C;
}

std::vector<double> batch_functional(const FunctionExpr& f, Family family, std::span<const cplx> z,
                                     std::vector<double>* fprime_abs, const simd::KernelTable& kernels) {
  const std::size_t n = z.size();
  std::vector<double> out(n, kNaN);
  if (fprime_abs) fprime_abs->assign(n, kNaN);
  const std::size_t chunks = (n + kBatchChunk - 1) / kBatchChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kBatchChunk;
    const std::size_t m = std::min(kBatchChunk, n - lo);
    BatchEvaluator ev(f, kernels);
    JetBatch jets;
    std::vector<std::uint8_t> ok;
    ev.evaluate(z.subspan(lo, m), jets, ok);
    std::vector<double> zr(m), zi(m), vals(m);
    for (std::size_t i = 0; i < m; ++i) {
      zr[i] = z[lo + i].real();
      zi[i] = z[lo + i].imag();
    }
    kernels.functional(to_functional(family), zr.data(), zi.data(), std::as_const(jets).planes(), vals.data(), m);
    for (std::size_t i = 0; i < m; ++i) {
      if (ok[i] && std::isfinite(vals[i])) out[lo + i] = vals[i];
      if (fprime_abs && ok[i]) (*fprime_abs)[lo + i] = std::hypot(jets.re(1)[i], jets.im(1)[i]);
    }
  });
  return out;
}

SchwarzianBatch batch_schwarzian(const FunctionExpr& f, std::span<const cplx> z, const simd::KernelTable& kernels) {
  const std::size_t n = z.size();
  SchwarzianBatch out;
  out.s.assign(n, cplx(kNaN, kNaN));
  out.weighted.assign(n, kNaN);
  const std::size_t chunks = (n + kBatchChunk - 1) / kBatchChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kBatchChunk;
    const std::size_t m = std::min(kBatchChunk, n - lo);
    BatchEvaluator ev(f, kernels);
    JetBatch jets;
    std::vector<std::uint8_t> ok;
    ev.evaluate(z.subspan(lo, m), jets, ok);
    std::vector<double> zr(m), zi(m), sr(m), si(m), w(m);
    for (std::size_t i = 0; i < m; ++i) {
      zr[i] = z[lo + i].real();
      zi[i] = z[lo + i].imag();
    }
    kernels.schwarzian(std::as_const(jets).planes(), sr.data(), si.data(), m);
    kernels.weighted_modulus(zr.data(), zi.data(), sr.data(), si.data(), w.data(), m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool f1_ok = std::hypot(jets.re(1)[i], jets.im(1)[i]) >= kSingularityThreshold;
      if (ok[i] && f1_ok && std::isfinite(sr[i]) && std::isfinite(si[i])) {
        out.s[lo + i] = {sr[i], si[i]};
        out.weighted[lo + i] = w[i];
      }
    }
  });
  return out;
}

}  // namespace gft
