#include <gtest/gtest.h>

#include <random>

#include "gft/error.hpp"
#include "gft/expr.hpp"
#include "gft/random.hpp"
#include "oracles.hpp"

namespace gft {
namespace {

TEST(Parse, EvaluatesOperatorsWithUsualPrecedence) {
  EXPECT_NEAR(std::abs(parse("1 + 2*3 - 4/2").eval(0.0) - cplx(5.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse("-2^2").eval(0.0) - cplx(-4.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse("2*i").eval(0.0) - cplx(0.0, 2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse("pi").eval(0.0) - cplx(std::numbers::pi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse("1.5e-1 + z").eval(1.0) - cplx(1.15)), 0.0, 1e-15);
}

TEST(Parse, ImplicitProductAfterNumber) {
  const cplx z{0.3, 0.7};
  EXPECT_EQ(parse("(2z+1)/(z+3)").eval(z), parse("(2*z+1)/(z+3)").eval(z));
  EXPECT_EQ(parse("3sin(z)").eval(z), parse("3*sin(z)").eval(z));
}

TEST(Parse, SignedExponent) {
  const cplx z{0.5, 0.1};
  EXPECT_NEAR(std::abs(parse("(1-z)^-0.5").eval(z) - std::pow(1.0 - z, -0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse("z^+2").eval(z) - z * z), 0.0, 1e-15);
}

TEST(Parse, VariableIsConfigurable) {
  EXPECT_NEAR(parse("1/(pi*(1+x^2))", 'x').eval(1.0).real(), 0.5 / std::numbers::pi, 1e-16);
  EXPECT_THROW(parse("z", 'x'), SyntaxError);
}

TEST(Parse, SyntaxErrorsCarryOffsetAndExpectations) {
  try {
    parse("z + * 2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  }
  EXPECT_THROW(parse("sin z"), SyntaxError);
  EXPECT_THROW(parse("(z + 1"), SyntaxError);
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("z $"), SyntaxError);
  EXPECT_THROW(parse("foo(z)"), SyntaxError);
}

TEST(Print, RoundTripsThroughTheParser) {
  const char* cases[] = {"z/4 + 1/z",           "-(1)/log(1-z)",        "(2z+1)/(z+3)",  "0.5*cot(0.25*z)",
                         "-0.5/(1 - (1-z)^-0.5)", "exp(sqrt(z+2)) - tan(z)", "z + 1/z - 2", "(1+2*i)*z"};
  std::mt19937_64 rng(3);
  for (const char* text : cases) {
    const FunctionExpr e = parse(text);
    const FunctionExpr back = parse(e.print());
    EXPECT_EQ(back.print(), e.print()) << text;
    for (int i = 0; i < 10; ++i) {
      const cplx z = random_annulus_point(rng, 0.1, 0.9);
      EXPECT_EQ(back.eval(z), e.eval(z)) << text;
    }
  }
}

TEST(Derivative, AgreesWithJetDerivatives) {
  const char* cases[] = {"z/4 + 1/z", "-(1)/log(1-z)", "sin(z)*exp(z)", "tan(z)/(2+z)", "cot(z+1)", "sqrt(z+2)",
                         "(1-z)^-0.5", "cos(z)^3"};
  std::mt19937_64 rng(5);
  for (const char* text : cases) {
    const FunctionExpr e = parse(text);
    const FunctionExpr d = derivative(e);
    for (int i = 0; i < 20; ++i) {
      const cplx z = random_annulus_point(rng, 0.2, 0.8);
      const Jet3 je = e.eval_jet(z), jd = d.eval_jet(z);
      EXPECT_NEAR(std::abs(jd.v0 - je.v1), 0.0, 1e-12 * std::max(1.0, std::abs(je.v1))) << text;
      EXPECT_NEAR(std::abs(jd.v1 - je.v2), 0.0, 1e-11 * std::max(1.0, std::abs(je.v2))) << text;
    }
  }
}

TEST(Transforms, ReciprocalMobiusAndSubstitution) {
  const FunctionExpr f = parse("z/(1-z)");
  const cplx z{0.2, -0.3};
  EXPECT_NEAR(std::abs(reciprocal(f).eval(z) - (1.0 - z) / z), 0.0, 1e-15);
  const FunctionExpr t = mobius_compose(f, 1.0, 2.0, 3.0, 1.0);
  const cplx w = f.eval(z);
  EXPECT_NEAR(std::abs(t.eval(z) - (w + 2.0) / (3.0 * w + 1.0)), 0.0, 1e-15);
  const FunctionExpr s = substitute(f, parse("2*z"));
  EXPECT_NEAR(std::abs(s.eval(z) - 2.0 * z / (1.0 - 2.0 * z)), 0.0, 1e-15);
}

TEST(Transforms, DegenerateMobiusRejected) {
  const FunctionExpr f = parse("z");
  try {
    mobius_compose(f, 1.0, 2.0, 2.0, 4.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateMobius);
  }
}

TEST(Evaluation, FailuresCarryKinds) {
  JetStatus s = JetStatus::Ok;
  parse("1/z").try_eval_jet(0.0, s);
  EXPECT_EQ(s, JetStatus::DivisionAtZero);
  EXPECT_THROW(parse("log(z)").eval_jet(0.0), Error);
}

TEST(Laurent, DetectsFamilyB) {
  const LaurentCheck b = laurent_b_check(parse("z/4 + 1/z"), 0.05);
  EXPECT_TRUE(b.is_b_form);
  EXPECT_NEAR(std::abs(b.residue_estimate - cplx(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(b.a0_estimate), 0.0, 1e-12);

  const LaurentCheck k = laurent_b_check(parse("z + 1/z - 2"), 0.05);
  EXPECT_TRUE(k.is_b_form);
  EXPECT_NEAR(std::abs(k.a0_estimate - cplx(-2.0)), 0.0, 1e-12);

  EXPECT_FALSE(laurent_b_check(parse("2/z"), 0.05).is_b_form);
  EXPECT_FALSE(laurent_b_check(parse("z/(1-z)"), 0.05).is_b_form);
  EXPECT_THROW(laurent_b_check(parse("1/z"), 0.5), Error);
}

}  // namespace
}  // namespace gft
