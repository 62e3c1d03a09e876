#include <gtest/gtest.h>

#include <cmath>

#include "gft/error.hpp"
#include "gft/radius.hpp"
#include "oracles.hpp"

namespace gft {
namespace {

DiskSampler sampler() {
  DiskSampler s;
  s.rings = 24;
  s.points_per_ring = 256;
  return s;
}

TEST(Radius, KnownValues) {
  EXPECT_NEAR(radius_inverse_convexity(0.0).r_alpha, static_cast<double>(oracle::kR0), 1e-14);
  EXPECT_NEAR(radius_inverse_convexity(0.5).r_alpha, static_cast<double>(oracle::kRHalf), 1e-14);
  EXPECT_NEAR(radius_closed_form(0.0), static_cast<double>(oracle::kR0), 1e-16);
}

TEST(Radius, RootInvariantsOnGrid) {
  double prev = 1.0;
  for (int i = 0; i < 50; ++i) {
    const double a = i / 50.0;
    const RadiusResult r = radius_inverse_convexity(a);
    EXPECT_LE(r.residual, 1e-12);
    EXPECT_LE(std::abs(r.r_alpha - r.closed_form), 1e-12);
    EXPECT_LT(radius_polynomial(a, 0.5 * r.r_alpha), 0.0);
    EXPECT_GT(radius_polynomial(a, 0.5 * (1 + r.r_alpha)), 0.0);
    EXPECT_LT(r.r_alpha, prev);
    prev = r.r_alpha;
  }
  EXPECT_LT(radius_inverse_convexity(1.0 - 1e-9).r_alpha, 1e-9);
  EXPECT_THROW(radius_inverse_convexity(1.0), Error);
}

TEST(VerifyRadius, KoebeReciprocalIsExtremal) {
  const FunctionExpr g = parse("z + 1/z - 2");
  const RadiusCheck inside = verify_radius(g, 0.0, sampler());
  EXPECT_TRUE(inside.holds_inside);
  const double r0 = radius_inverse_convexity(0.0).r_alpha;
  EXPECT_TRUE(rotated_witness(g, 0.0, r0 + 0.01).violates);
  EXPECT_FALSE(rotated_witness(g, 0.0, r0 - 0.01).violates);
  EXPECT_FALSE(verify_on_disk(g, 0.0, 0.999, sampler()).holds_inside);
}

TEST(VerifyRadius, HalfPlaneReciprocal) {
  // The functional is -1 + 2 Re(1/(1-z)) >= (1-r)/(1+r) on |z| <= r.
  const FunctionExpr g = parse("(1-z)/z").with_singular_points({0.0});
  for (double a : {0.0, 0.5, 0.9}) {
    const RadiusCheck c = verify_radius(g, a, sampler());
    EXPECT_TRUE(c.holds_inside);
    EXPECT_GE(c.margin + a, (1 - c.radius) / (1 + c.radius) - 1e-9);
  }
  EXPECT_TRUE(verify_on_disk(g, 0.0, 0.99, sampler()).holds_inside);
  EXPECT_FALSE(verify_on_disk(g, 0.5, 0.99, sampler()).holds_inside);
}

TEST(VerifyRadius, DistortionBoundHolds) {
  // Re(2 z g'/g - z g''/g') <= (4r - 2r^2)/(1 - r^2) for univalent B-form g,
  // i.e. the inverse-convexity functional is at least 1 - that bound.
  const char* fs[] = {"z + 1/z - 2", "(1-z)/z", "z/4 + 1/z", "-(1)/log(1-z)", "z + 1/z", "(1+z)^2/z"};
  for (const char* text : fs) {
    const FunctionExpr g = parse(text).with_singular_points({0.0});
    for (double r : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
      DiskSampler s = sampler();
      s.rings = 4;
      const RadiusCheck c = verify_on_disk(g, 0.0, r, s);
      const double bound = (4 * r - 2 * r * r) / (1 - r * r);
      EXPECT_GE(c.margin, 1 - bound - 1e-6) << text << " r = " << r;
    }
  }
}

}  // namespace
}  // namespace gft
