#include <gtest/gtest.h>

#include "gft/catalog.hpp"
#include "gft/classify.hpp"
#include "gft/error.hpp"

namespace gft {
namespace {

DiskSampler small_sampler() {
  DiskSampler s;
  s.rings = 24;
  s.points_per_ring = 128;
  return s;
}

TEST(Sampler, RingsRunFromExclusionToRmax) {
  DiskSampler s;
  EXPECT_DOUBLE_EQ(s.ring_radius(0), s.exclusion_radius);
  EXPECT_DOUBLE_EQ(s.ring_radius(s.rings - 1), s.r_max);
  for (int k = 1; k < s.rings; ++k) EXPECT_GT(s.ring_radius(k), s.ring_radius(k - 1));
  // geometric in the distance to the boundary
  const double g1 = (1 - s.ring_radius(1)) / (1 - s.ring_radius(0));
  const double g2 = (1 - s.ring_radius(11)) / (1 - s.ring_radius(10));
  EXPECT_NEAR(g1, g2, 1e-12);
  EXPECT_EQ(s.points().size(), static_cast<std::size_t>(s.rings * s.points_per_ring));
}

TEST(Sampler, ValidatesAndExcludes) {
  DiskSampler s;
  s.r_max = 1.0;
  EXPECT_THROW(s.validate(), Error);
  s = DiskSampler{};
  s.exclusion_radius = 0.0;
  EXPECT_THROW(s.validate(), Error);
  s = small_sampler();
  s.extra_singular_exclusions.push_back({cplx(0.999, 0.0), 0.1});
  for (cplx z : s.points()) EXPECT_GE(std::abs(z - cplx(0.999)), 0.1);
}

TEST(Functional, ClosedFormValues) {
  const FunctionExpr f = parse("z/4 + 1/z");
  EXPECT_NEAR(functional_value(f, Family::BC, 0.5), 17.0 / 15.0, 1e-14);
  EXPECT_NEAR(functional_value(parse("-log(1-z)"), Family::C, 0.0), 1.0, 1e-15);
}

TEST(Functional, LimitsAtOrigin) {
  const FunctionExpr b = parse("z/4 + 1/z");
  EXPECT_EQ(functional_value(b, Family::BC, 0.0), 1.0);
  EXPECT_EQ(functional_value(b, Family::BSstar, 0.0), 1.0);
  EXPECT_EQ(functional_value(b, Family::BCI, 0.0), 1.0);
  EXPECT_EQ(functional_value(b, Family::C, 0.0), -1.0);
  const FunctionExpr a = parse("z/(1-z)");
  EXPECT_EQ(functional_value(a, Family::Sstar, 0.0), 1.0);
  EXPECT_EQ(functional_value(a, Family::BSstar, 0.0), -1.0);
  EXPECT_THROW(functional_value(parse("log(z)"), Family::C, 0.0), Error);
}

TEST(Functional, LimitIsApproachedContinuously) {
  for (const CatalogEntry& e : catalog()) {
    if (!e.b_form) continue;
    for (double t : {0.0, 1.0, 2.5}) {
      EXPECT_NEAR(functional_value(e.expr, Family::BC, std::polar(1e-3, t)), 1.0, 1e-2) << e.name;
      EXPECT_NEAR(functional_value(e.expr, Family::BC, std::polar(1e-4, t)), 1.0, 1e-4) << e.name;
    }
  }
}

TEST(Functional, BciIsScaleFree) {
  const FunctionExpr g = power_reciprocal_entry(0.25).expr;
  for (cplx lambda : {cplx(2.0), cplx(0, 1), cplx(-3, 4)}) {
    const FunctionExpr scaled = lambda * g;
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.9, 0.2), cplx(0.0, 0.99)}) {
      EXPECT_NEAR(functional_value(scaled, Family::BCI, z), functional_value(g, Family::BCI, z), 1e-12);
    }
  }
}

TEST(Functional, CriticalPointFlagged) {
  try {
    functional_value(parse("z + 1/z"), Family::BC, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LocallyNonUnivalent);
  }
}

TEST(Membership, QuarterPlusReciprocal) {
  const FamilyVerdict v = membership(parse("z/4 + 1/z"), Family::BC, 0.5, DiskSampler{});
  EXPECT_TRUE(v.holds_on_samples);
  EXPECT_NEAR(v.order_estimate, 0.6, 1e-3);
  EXPECT_NEAR(std::abs(v.witness.imag()), 0.999, 1e-6);
  EXPECT_TRUE(v.univalence_not_checked);
}

TEST(Membership, PowerReciprocalIsInverseConvex) {
  const CatalogEntry e = power_reciprocal_entry(0.25);
  EXPECT_TRUE(membership(reciprocal(e.expr), Family::C, 0.25, small_sampler()).holds_on_samples);
  EXPECT_TRUE(membership(e.expr, Family::BCI, 0.25, small_sampler()).holds_on_samples);
}

TEST(Membership, KoebeIsNotConvex) {
  const FamilyVerdict v = membership(parse("z/(1-z)^2"), Family::C, 0.0, DiskSampler{});
  EXPECT_FALSE(v.holds_on_samples);
  EXPECT_NEAR(v.witness.real(), -0.999, 1e-6);
  EXPECT_LT(std::abs(v.witness.imag()), 1e-6);
}

TEST(Membership, VerdictInvariants) {
  const FunctionExpr f = parse("z/4 + 1/z");
  for (double a : {0.0, 0.3, 0.6, 0.9}) {
    const FamilyVerdict v = membership(f, Family::BC, a, small_sampler());
    EXPECT_EQ(v.holds_on_samples, v.margin >= -v.tolerance);
    if (v.holds_on_samples) EXPECT_GE(v.order_estimate, a);
  }
}

TEST(Membership, RejectsAlphaOutsideRange) {
  EXPECT_THROW(membership(parse("z"), Family::C, 1.0, small_sampler()), Error);
  EXPECT_THROW(membership(parse("z"), Family::C, -0.1, small_sampler()), Error);
}

TEST(OrderEstimate, MatchesClosedForms) {
  const DiskSampler s;
  EXPECT_NEAR(order_estimate(parse("-log(1-z)"), Family::C, s), 0.5, 1e-3);
  EXPECT_NEAR(order_estimate(parse("z/4 + 1/z"), Family::BC, s), 0.6, 1e-3);
  EXPECT_NEAR(order_estimate(parse("(1-z)/z"), Family::BC, s), 1.0, 1e-9);
  EXPECT_NEAR(membership(parse("(1-z)/z"), Family::BC, 0.5, s).order_estimate, 1.0, 1e-12);
}

TEST(OrderEstimate, NestingIsGovernedByOneNumber) {
  const FunctionExpr g = power_reciprocal_entry(0.25).expr;
  const DiskSampler s = small_sampler();
  const double order = order_estimate(g, Family::BCI, s);
  for (double a = 0.0; a < 1.0; a += 0.05) {
    EXPECT_EQ(membership(g, Family::BCI, a, s).holds_on_samples, order - a >= -kSampledTolerance) << a;
  }
}

TEST(OrderEstimate, ReciprocalDuality) {
  const DiskSampler s = small_sampler();
  for (const char* text : {"z/(1-z)", "z/(1-z)^2", "-log(1-z)", "z + z^2/3"}) {
    const FunctionExpr f = parse(text);
    EXPECT_NEAR(order_estimate(f, Family::Sstar, s), order_estimate(reciprocal(f), Family::BSstar, s), 1e-9) << text;
  }
}

TEST(Injectivity, SpotCheck) {
  const DiskSampler s = small_sampler();
  EXPECT_EQ(injectivity_spot_check(parse("z/(1-z)^2"), s).collisions, 0u);
  const InjectivityCheck bad = injectivity_spot_check(parse("z^2"), s, 10000, 3);
  ASSERT_GT(bad.collisions, 0u);
  EXPECT_NEAR(std::abs(bad.witness->first + bad.witness->second), 0.0, 1e-9);
  EXPECT_GT(injectivity_spot_check(parse("z"), s).pairs, 9000u);
}

}  // namespace
}  // namespace gft
