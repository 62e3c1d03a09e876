#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "gft/batch.hpp"
#include "gft/classify.hpp"
#include "gft/random.hpp"
#include "gft/schwarz.hpp"
#include "gft/simd/kernels.hpp"

namespace gft {
namespace {

struct Planes {
  std::array<std::vector<double>, 4> re, im;
  explicit Planes(std::size_t n, std::mt19937_64* rng = nullptr) {
    for (int k = 0; k < 4; ++k) {
      re[k].resize(n);
      im[k].resize(n);
      if (rng) {
        for (std::size_t i = 0; i < n; ++i) {
          re[k][i] = uniform(*rng, -2, 2);
          im[k][i] = uniform(*rng, -2, 2);
        }
      }
    }
  }
  simd::JetPlanes mut() {
    simd::JetPlanes p{};
    for (int k = 0; k < 4; ++k) p.re[k] = re[k].data(), p.im[k] = im[k].data();
    return p;
  }
  simd::ConstJetPlanes view() const {
    simd::ConstJetPlanes p{};
    for (int k = 0; k < 4; ++k) p.re[k] = re[k].data(), p.im[k] = im[k].data();
    return p;
  }
};

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    vec_ = simd::avx2_kernels();
    if (!vec_) GTEST_SKIP() << "AVX2 kernels not available on this machine";
  }
  const simd::KernelTable& ref_ = simd::scalar_kernels();
  const simd::KernelTable* vec_ = nullptr;
};

TEST_P(KernelEquivalence, JetArithmeticIsBitIdentical) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(n);
  const Planes a(n, &rng), b(n, &rng);
  using Fn = void (*)(simd::ConstJetPlanes, simd::ConstJetPlanes, simd::JetPlanes, std::size_t);
  const std::pair<Fn, Fn> pairs[] = {{ref_.jet_add, vec_->jet_add},
                                     {ref_.jet_sub, vec_->jet_sub},
                                     {ref_.jet_mul, vec_->jet_mul},
                                     {ref_.jet_div, vec_->jet_div}};
  for (const auto& [f_ref, f_vec] : pairs) {
    Planes x(n), y(n);
    f_ref(a.view(), b.view(), x.mut(), n);
    f_vec(a.view(), b.view(), y.mut(), n);
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(bitwise_equal(x.re[k], y.re[k]));
      EXPECT_TRUE(bitwise_equal(x.im[k], y.im[k]));
    }
  }
}

TEST_P(KernelEquivalence, SchwarzianAndFunctionalsAreBitIdentical) {
  const std::size_t n = GetParam();
  std::mt19937_64 rng(n + 100);
  const Planes f(n, &rng);
  std::vector<double> zr(n), zi(n);
  for (std::size_t i = 0; i < n; ++i) zr[i] = uniform(rng, -1, 1), zi[i] = uniform(rng, -1, 1);

  std::vector<double> sr1(n), si1(n), sr2(n), si2(n);
  ref_.schwarzian(f.view(), sr1.data(), si1.data(), n);
  vec_->schwarzian(f.view(), sr2.data(), si2.data(), n);
  EXPECT_TRUE(bitwise_equal(sr1, sr2));
  EXPECT_TRUE(bitwise_equal(si1, si2));

  ref_.pre_schwarzian(f.view(), sr1.data(), si1.data(), n);
  vec_->pre_schwarzian(f.view(), sr2.data(), si2.data(), n);
  EXPECT_TRUE(bitwise_equal(sr1, sr2));
  EXPECT_TRUE(bitwise_equal(si1, si2));

  std::vector<double> w1(n), w2(n);
  ref_.weighted_modulus(zr.data(), zi.data(), sr1.data(), si1.data(), w1.data(), n);
  vec_->weighted_modulus(zr.data(), zi.data(), sr1.data(), si1.data(), w2.data(), n);
  EXPECT_TRUE(bitwise_equal(w1, w2));

  for (auto fam : {simd::Functional::C, simd::Functional::Sstar, simd::Functional::BC, simd::Functional::BSstar,
                   simd::Functional::BCI}) {
    ref_.functional(fam, zr.data(), zi.data(), f.view(), w1.data(), n);
    vec_->functional(fam, zr.data(), zi.data(), f.view(), w2.data(), n);
    EXPECT_TRUE(bitwise_equal(w1, w2)) << static_cast<int>(fam);
  }
}

// Sizes around the vector width exercise the scalar tail.
INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence, ::testing::Values(1, 3, 4, 5, 8, 9, 1023, 1027));

TEST(BatchEvaluation, MatchesPointwiseJets) {
  const FunctionExpr f = parse("-(1)/log(1-z) + sin(z)*exp(z)/(z+3) - (1-z)^-0.5");
  std::mt19937_64 rng(11);
  std::vector<cplx> z(2500);
  for (auto& p : z) p = random_annulus_point(rng, 0.01, 0.99);
  for (const auto* table : {&simd::scalar_kernels(), simd::avx2_kernels()}) {
    if (!table) continue;
    BatchEvaluator ev(f, *table);
    JetBatch out;
    std::vector<std::uint8_t> ok;
    ev.evaluate(z, out, ok);
    for (std::size_t i = 0; i < z.size(); ++i) {
      ASSERT_TRUE(ok[i]);
      const Jet3 ref = f.eval_jet(z[i]);
      const Jet3 got = out.get(i);
      for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(got[k] - ref[k]), 0.0, 1e-12 * std::max(1.0, std::abs(ref[k])));
      }
    }
  }
}

TEST(BatchEvaluation, FlagsSingularSamples) {
  const FunctionExpr f = parse("1/z + log(1-z)");
  const std::vector<cplx> z{0.0, 0.5, 1.0, cplx(0, 0.5)};
  BatchEvaluator ev(f);
  JetBatch out;
  std::vector<std::uint8_t> ok;
  ev.evaluate(z, out, ok);
  EXPECT_EQ(ok, (std::vector<std::uint8_t>{0, 1, 0, 1}));
}

TEST(BatchEvaluation, FunctionalsMatchPointwiseValues) {
  const FunctionExpr f = parse("z/4 + 1/z");
  std::mt19937_64 rng(12);
  std::vector<cplx> z(3000);
  for (auto& p : z) p = random_annulus_point(rng, 0.01, 0.999);
  for (Family fam : kAllFamilies) {
    const std::vector<double> v = batch_functional(f, fam, z);
    for (std::size_t i = 0; i < z.size(); ++i) {
      EXPECT_NEAR(v[i], functional_value(f, fam, z[i]), 1e-12 * std::max(1.0, std::abs(v[i])));
    }
  }
  const SchwarzianBatch sb = batch_schwarzian(f, z);
  for (std::size_t i = 0; i < z.size(); ++i) {
    EXPECT_NEAR(std::abs(sb.s[i] - schwarzian(f, z[i])), 0.0, 1e-9 * std::max(1.0, std::abs(sb.s[i])));
  }
}

TEST(BatchEvaluation, ThreadCountDoesNotChangeResults) {
  const FunctionExpr f = parse("z/(1-z)^2");
  std::mt19937_64 rng(13);
  std::vector<cplx> z(5000);
  for (auto& p : z) p = random_annulus_point(rng, 0.0, 0.99);
  setenv("GFT_THREADS", "1", 1);
  const std::vector<double> one = batch_functional(f, Family::C, z);
  setenv("GFT_THREADS", "7", 1);
  const std::vector<double> many = batch_functional(f, Family::C, z);
  unsetenv("GFT_THREADS");
  EXPECT_TRUE(bitwise_equal(one, many));
}

}  // namespace
}  // namespace gft
