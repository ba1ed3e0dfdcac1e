#include <gtest/gtest.h>

#include <cmath>

#include "sal/format.hpp"
#include "sal/parser.hpp"

using namespace sal;

namespace {

ParamExpr P(const char* s) { return parse_param(s); }
UCoeff U(const char* s) { return parse_expr(s); }

}  // namespace

TEST(ParamExpr, ReducesToLowestTerms) {
  EXPECT_EQ(P("(b^2 - 1)*(b + 1)^-1"), P("b - 1"));
  EXPECT_EQ(P("(2*b + 4)^-1"), P("1/2*(b + 2)^-1"));
  EXPECT_EQ(P("gamma*beta - beta*gamma"), ParamExpr(0));
  EXPECT_TRUE(P("(b + 2)*(b + 2)^-1").is_constant());
}

TEST(ParamExpr, Substitution) {
  const ParamExpr e = P("gamma*(b + 2)^-1");
  EXPECT_EQ(e.substitute(Param::b, ParamExpr(1)), P("1/3*gamma"));
  EXPECT_EQ(substitute(e, {{Param::b, ParamExpr(0)}, {Param::gamma, ParamExpr(4)}}), ParamExpr(2));
}

TEST(ParamExpr, ZeroDivisionThrows) { EXPECT_THROW(ParamExpr(0).inverse(), AlgebraError); }

TEST(UCoeff, PowerArithmetic) {
  EXPECT_EQ(U("u^b*u^(b - 1)"), U("u^(2*b - 1)"));
  EXPECT_EQ(U("2*u + u"), U("3*u"));
  EXPECT_EQ(U("u^1/2*u^1/2"), U("u"));
  EXPECT_EQ(U("(u + 1)^2"), U("u^2 + 2*u + 1"));
}

TEST(UCoeff, DerivativeInU) {
  EXPECT_EQ(U("gamma*u^b").du(), U("gamma*b*u^(b - 1)"));
  EXPECT_EQ(U("ln(u)").du(), U("u^-1"));
  EXPECT_EQ(U("u*ln(u)^2").du(), U("ln(u)^2 + 2*ln(u)"));
  EXPECT_EQ(U("u*f'").du(), U("f' + u*f''"));
}

TEST(UCoeff, IntegrationInU) {
  EXPECT_EQ(*U("u^-1").integrate_u(), U("ln(u)"));
  EXPECT_EQ(*U("u^(b + 1)").integrate_u(), U("(b + 2)^-1*u^(b + 2)"));
  EXPECT_EQ(*U("u^-1*ln(u)").integrate_u(), U("1/2*ln(u)^2"));
  EXPECT_EQ(*U("g''").integrate_u(), U("g'"));
  for (const char* s : {"3*u^2 + u^-1", "u^b*ln(u)", "u^-1*ln(u)^2 + u^(b - 1)", "u^-2*ln(u)"}) {
    const auto I = U(s).integrate_u();
    ASSERT_TRUE(I) << s;
    EXPECT_EQ(I->du(), U(s)) << s;
  }
  EXPECT_FALSE(U("u*f").integrate_u());
}

TEST(UCoeff, NumericEvaluation) {
  EXPECT_DOUBLE_EQ(U("3*u^2 - u^-1").evaluate(2.0), 11.5);
  EXPECT_NEAR(U("u^1/2*ln(u)").evaluate(4.0), 2 * std::log(4.0), 1e-15);
  EXPECT_THROW(U("gamma*u").evaluate(1.0), Error);
  EXPECT_THROW(U("f").evaluate(1.0), Error);
}

TEST(UCoeff, InstantiateFormal) {
  const UCoeff e = U("u*g' + 2*g");
  EXPECT_EQ(e.instantiate(Formal::g, U("u^3")), U("5*u^3"));
}
