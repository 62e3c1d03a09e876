#include <gtest/gtest.h>

#include <random>

#include "gft/error.hpp"
#include "gft/jet.hpp"
#include "gft/random.hpp"
#include "oracles.hpp"

namespace gft {
namespace {

double max_rel(const Jet3& j, const std::array<cplx, 4>& ref) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(j[k] - ref[k]) / std::max(std::abs(ref[k]), 1e-300));
  return worst;
}

struct ElementaryCase {
  const char* name;
  JetFn fn;
  cplx (*plain)(cplx);
  double r_lo, r_hi;  // sample annulus around center
  cplx center;
};

cplx p_exp(cplx z) { return std::exp(z); }
cplx p_log(cplx z) { return std::log(z); }
cplx p_sin(cplx z) { return std::sin(z); }
cplx p_cos(cplx z) { return std::cos(z); }
cplx p_tan(cplx z) { return std::tan(z); }
cplx p_cot(cplx z) { return 1.0 / std::tan(z); }
cplx p_sqrt(cplx z) { return std::sqrt(z); }

class ElementaryJet : public ::testing::TestWithParam<ElementaryCase> {};

TEST_P(ElementaryJet, MatchesCauchyIntegralDerivatives) {
  const auto& c = GetParam();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const cplx z = c.center + random_annulus_point(rng, c.r_lo, c.r_hi);
    const Jet3 j = apply(c.fn, seed_variable(z));
    const auto ref = oracle::cauchy_derivatives(c.plain, z, 0.05);
    EXPECT_LT(max_rel(j, ref), 1e-10) << c.name << " at " << z;
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, ElementaryJet,
    ::testing::Values(ElementaryCase{"exp", JetFn::Exp, p_exp, 0.0, 2.0, 0.0},
                      ElementaryCase{"log", JetFn::Log, p_log, 0.0, 0.8, 1.2},
                      ElementaryCase{"sin", JetFn::Sin, p_sin, 0.0, 2.0, 0.0},
                      ElementaryCase{"cos", JetFn::Cos, p_cos, 0.0, 2.0, 0.0},
                      ElementaryCase{"tan", JetFn::Tan, p_tan, 0.0, 1.2, 0.0},
                      ElementaryCase{"cot", JetFn::Cot, p_cot, 0.3, 1.2, 0.0},
                      ElementaryCase{"sqrt", JetFn::Sqrt, p_sqrt, 0.0, 0.8, 1.2}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(JetArithmetic, ProductAndQuotientFollowLeibniz) {
  const cplx z{0.3, -0.4};
  const Jet3 x = seed_variable(z);
  const Jet3 f = sin(x) * exp(x) / (1.0 + x * x);
  auto plain = [](cplx w) { return std::sin(w) * std::exp(w) / (1.0 + w * w); };
  EXPECT_LT(max_rel(f, oracle::cauchy_derivatives(plain, z, 0.1)), 1e-11);
}

TEST(JetArithmetic, DivisionUndoesMultiplication) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Jet3 a{random_annulus_point(rng, 0.5, 2), random_annulus_point(rng, 0, 2), random_annulus_point(rng, 0, 2),
                 random_annulus_point(rng, 0, 2)};
    const Jet3 b{random_annulus_point(rng, 0.5, 2), random_annulus_point(rng, 0, 2), random_annulus_point(rng, 0, 2),
                 random_annulus_point(rng, 0, 2)};
    const Jet3 back = (a * b) / b;
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(back[k] - a[k]), 0.0, 1e-12);
  }
}

TEST(JetArithmetic, MultiplicationIsAssociative) {
  const Jet3 a{1.0, {0.5, 1}, 2.0, -1.0}, b{{0, 1}, 3.0, -2.0, 0.25}, c{2.0, -1.0, {1, 1}, 4.0};
  const Jet3 l = (a * b) * c, r = a * (b * c);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(l[k] - r[k]), 0.0, 1e-13);
}

TEST(JetElementary, CotAgreesWithHighPrecisionValue) {
  const Jet3 j = cot(seed_variable(0.3));
  EXPECT_NEAR(j.v0.real(), static_cast<double>(oracle::kCot03), 4e-16);
  // cot' = -(1 + cot^2)
  const double c = static_cast<double>(oracle::kCot03);
  EXPECT_NEAR(j.v1.real(), -(1.0 + c * c), 1e-14);
}

TEST(JetPower, IntegerPowersHaveNoBranchCut) {
  const Jet3 j = pow(seed_variable(-2.0), 3.0);
  EXPECT_EQ(j.v0, cplx(-8.0));
  EXPECT_EQ(j.v1, cplx(12.0));
  EXPECT_EQ(j.v2, cplx(-12.0));
  EXPECT_EQ(j.v3, cplx(6.0));
}

TEST(JetPower, FractionalPowerMatchesOracle) {
  const cplx z{0.7, 0.2};
  const Jet3 j = pow(seed_variable(z), -0.5);
  auto plain = [](cplx w) { return std::pow(w, -0.5); };
  EXPECT_LT(max_rel(j, oracle::cauchy_derivatives(plain, z, 0.05)), 1e-10);
}

TEST(JetSingularities, ReportedThroughStatus) {
  JetStatus s = JetStatus::Ok;
  try_divide(Jet3::constant(1.0), seed_variable(0.0), s);
  EXPECT_EQ(s, JetStatus::DivisionAtZero);
  s = JetStatus::Ok;
  try_apply(JetFn::Log, seed_variable(0.0), s);
  EXPECT_EQ(s, JetStatus::BranchPointOrPole);
  s = JetStatus::Ok;
  try_apply(JetFn::Sqrt, seed_variable(0.0), s);
  EXPECT_EQ(s, JetStatus::BranchPointOrPole);
  s = JetStatus::Ok;
  try_pow(seed_variable(0.0), -1.0, s);
  EXPECT_EQ(s, JetStatus::BranchPointOrPole);
  s = JetStatus::Ok;
  try_apply(JetFn::Cot, seed_variable(0.0), s);
  EXPECT_NE(s, JetStatus::Ok);
}

TEST(JetSingularities, ThrowingWrappersCarryKind) {
  try {
    (void)(Jet3::constant(1.0) / seed_variable(0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionAtZero);
  }
  try {
    (void)log(seed_variable(0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BranchPointOrPole);
  }
}

TEST(JetCompose, ChainRuleThroughOuterJet) {
  const cplx z{0.2, 0.1};
  const Jet3 inner = sin(seed_variable(z));
  const cplx w = inner.v0;
  const std::array<cplx, 4> outer{std::exp(w), std::exp(w), std::exp(w), std::exp(w)};
  const Jet3 viaCompose = compose(outer, inner);
  const Jet3 direct = exp(inner);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(viaCompose[k] - direct[k]), 0.0, 1e-14);
}

}  // namespace
}  // namespace gft
