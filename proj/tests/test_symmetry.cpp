#include <gtest/gtest.h>

#include "sal/format.hpp"
#include "sal/parser.hpp"
#include "sal/symmetry.hpp"

using namespace sal;

namespace {

JetExpr J(const char* s) { return parse_jet(s); }
ParamExpr P(const char* s) { return parse_param(s); }

}  // namespace

TEST(Prolongation, ScalingCoordinates) {
  const ProlongedGenerator X = prolong(scaling(P("b")), 3);
  EXPECT_EQ(X.zeta.at(du(0, 1)), J("u_x"));
  EXPECT_EQ(X.zeta.at(du(1, 0)), J("(b + 1)*u_t"));
  EXPECT_EQ(X.zeta.at(du(1, 2)), J("(b + 1)*u_txx"));
  EXPECT_EQ(X.zeta.at(du(0, 3)), J("u_xxx"));
}

TEST(Prolongation, TranslationsVanish) {
  for (const Generator& g : {time_translation(), space_translation()}) {
    for (const auto& [d, z] : prolong(g, 3).zeta) EXPECT_TRUE(z.is_zero()) << to_string(d);
  }
}

TEST(Invariance, FamilyScalesWithWeightBPlusOne) {
  const EquationSpec s = family_spec(P("eps"), P("b"), P("gamma"), P("beta"));
  const InvarianceResult r = invariance_residual(scaling(P("b")), s);
  ASSERT_TRUE(r.is_symmetry());
  EXPECT_EQ(*r.lambda, P("b + 1"));
}

TEST(Invariance, CamassaHolm) {
  const InvarianceResult r = invariance_residual(scaling(1), camassa_holm());
  ASSERT_TRUE(r.is_symmetry());
  EXPECT_EQ(*r.lambda, ParamExpr(2));
  EXPECT_TRUE(invariance_residual(time_translation(), camassa_holm()).is_symmetry());
  EXPECT_TRUE(invariance_residual(space_translation(), camassa_holm()).is_symmetry());
  EXPECT_FALSE(invariance_residual(scaling(2), camassa_holm()).is_symmetry());
}

TEST(Invariance, FormalClassConditions) {
  const InvarianceResult r = invariance_residual(scaling(P("b")), formal_spec());
  ASSERT_TRUE(r.lambda);
  EXPECT_EQ(*r.lambda, P("b + 1"));
  ASSERT_EQ(r.conditions.size(), 3U);
  for (const Condition& c : r.conditions) {
    const UCoeff solved = c.coefficient.instantiate(Formal::f, parse_expr("gamma*u^b"))
                              .instantiate(Formal::g, parse_expr("sigma*u^(b - 1)"))
                              .instantiate(Formal::h, parse_expr("delta*u^b"));
    EXPECT_TRUE(solved.is_zero()) << to_string(c.coefficient);
  }
}

TEST(ClassifyScaling, PowerLaws) {
  const ScalingFamily fam = classify_scaling(P("b"));
  EXPECT_EQ(fam.f, parse_expr("gamma*u^b"));
  EXPECT_EQ(fam.g, parse_expr("sigma*u^(b - 1)"));
  EXPECT_EQ(fam.h, parse_expr("delta*u^b"));
  const ScalingFamily zero = classify_scaling(0);
  EXPECT_EQ(zero.f, parse_expr("gamma"));
  EXPECT_EQ(zero.g, parse_expr("sigma*u^-1"));
}
