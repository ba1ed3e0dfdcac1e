#include <gtest/gtest.h>

#include "sal/adjoint.hpp"
#include "sal/conserved.hpp"
#include "sal/format.hpp"
#include "sal/parser.hpp"

using namespace sal;

namespace {

JetExpr J(const char* s) { return parse_jet(s); }
ParamExpr P(const char* s) { return parse_param(s); }

EquationSpec symbolic_family() { return family_spec(P("eps"), P("b"), P("gamma"), P("beta")); }

// Total x-derivative part of the raw density for the symbolic family.
const char* kPhi =
    "1/3*b*eps*t*u_t*u_x - b*(b + 2)^-1*gamma*t*u^(b + 2) + 2/3*eps*u*u_x + b*beta*t*u^(b + 1)*u_xx"
    " - 2/3*b*eps*t*u*u_tx";

}  // namespace

TEST(Ibragimov, RawVectorOfTheFamily) {
  const ConservedVector C = ibragimov_vector(scaling(P("b")), symbolic_family());
  EXPECT_TRUE(C.local);
  const JetExpr phi = J(kPhi);
  EXPECT_EQ(C.c0, J("u^2 - eps*u_x^2") + total_derivative(phi, Axis::x));
  EXPECT_EQ(C.c1, J("2*gamma*(b + 2)^-1*u^(b + 2) - 2*beta*u^(b + 1)*u_xx + 2*eps*u*u_tx") -
                      total_derivative(phi, Axis::t));
}

TEST(Ibragimov, RawVectorIsConserved) {
  const ConservedVector C = ibragimov_vector(scaling(P("b")), symbolic_family());
  EXPECT_EQ(characteristic_of(C, symbolic_family()), J("2*u"));
}

TEST(Ibragimov, NonSymmetryIsRejected) {
  EXPECT_THROW(ibragimov_vector(scaling(2), camassa_holm()), NotASymmetryError);
}

TEST(Ibragimov, NonSelfAdjointStaysNonlocal) {
  const ConservedVector C = ibragimov_vector(scaling(1), b_equation(3));
  EXPECT_FALSE(C.local);
  EXPECT_TRUE(C.c0.contains(Dep::v));
  EXPECT_THROW(characteristic_of(C, b_equation(3)), NonConservationError);
}

TEST(StripTrivial, ReducesToTheFamilyCurrent) {
  const ConservedVector C = strip_trivial(ibragimov_vector(scaling(P("b")), symbolic_family()));
  EXPECT_EQ(C.c0, J("u^2 - eps*u_x^2"));
  EXPECT_EQ(C.c1, J("2*gamma*(b + 2)^-1*u^(b + 2) - 2*beta*u^(b + 1)*u_xx + 2*eps*u*u_tx"));
}

TEST(StripTrivial, RemovesPureDivergences) {
  const JetExpr P1 = J("t*u*u_xx + ln(u)*u_x");
  const ConservedVector C{total_derivative(P1, Axis::x), -total_derivative(P1, Axis::t), std::nullopt, true};
  const ConservedVector R = strip_trivial(C);
  EXPECT_TRUE(R.c0.is_zero()) << to_string(R.c0);
  EXPECT_TRUE(R.c1.is_zero()) << to_string(R.c1);
}

TEST(StripTrivial, SpaceTranslationIsTrivial) {
  const ConservedVector C = strip_trivial(ibragimov_vector(space_translation(), camassa_holm()));
  EXPECT_TRUE(characteristic_of(C, camassa_holm()).is_zero());
}

TEST(Characteristic, DivergenceIdentityForSymbolicB) {
  const EquationSpec s = symbolic_family();
  const JetExpr c0 = J("u^2 - eps*u_x^2");
  const JetExpr c1 = J("2*(2 + b)^-1*gamma*u^(b + 2) - 2*beta*u^(b + 1)*u_xx + 2*eps*u*u_tx");
  const JetExpr div = total_derivative(c0, Axis::t) + total_derivative(c1, Axis::x);
  EXPECT_TRUE((div - J("2*u") * equation_expr(s)).is_zero());
}

TEST(Characteristic, NonConservedThrows) {
  const ConservedVector C{J("u"), JetExpr(), std::nullopt, true};
  EXPECT_THROW(characteristic_of(C, camassa_holm()), NonConservationError);
}

TEST(Table, SixRows) {
  const std::vector<std::pair<const char*, const char*>> expected = {
      {"u^2 + u_x^2", "-2/3*u^3 - 2*u*u_tx"},
      {"u^2 + u_x^2", "2*u^3 - 2*u^2*u_xx - 2*u*u_tx"},
      {"u^2 + u_x^2", "2*u^4 - 2*u^3*u_xx - 2*u*u_tx"},
      {"u^2", "2*(2 + b)^-1*gamma*u^(b + 2)"},
      {"u^2 - eps*u_x^2", "gamma*u^2 - 2*(beta - c)*u*u_xx + 2*eps*u*u_tx - c*u_x^2"},
      {"u^2 - eps*u_x^2", "-2*beta*u^-1*u_xx + 2*gamma*ln(u) + 2*eps*u*u_tx"},
  };
  const std::vector<EquationSpec> specs = table_specs();
  ASSERT_EQ(specs.size(), expected.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const TableRow row = table_row(specs[i]);
    EXPECT_EQ(row.density, J(expected[i].first)) << row.label;
    EXPECT_EQ(row.flux, J(expected[i].second)) << row.label << ": " << to_string(row.flux);
    EXPECT_EQ(row.characteristic, J("2*u")) << row.label;
  }
}

TEST(Table, PositiveBbmFluxBelongsToGammaPlusOne) {
  // The cubic term carries the sign of gamma: +2/3 u^3 conserves only with gamma = +1.
  const ConservedVector printed{J("u^2 + u_x^2"), J("2/3*u^3 - 2*u*u_tx"), std::nullopt, true};
  EXPECT_THROW(characteristic_of(printed, bbm()), NonConservationError);
  const EquationSpec flipped = family_spec(-1, 1, 1, 0);
  EXPECT_EQ(table_row(flipped).flux, printed.c1);
}

TEST(Table, RejectsNonSelfAdjointMembers) {
  EXPECT_THROW(table_row(b_equation(3)), UnsupportedSpecError);
  EXPECT_THROW(table_row(formal_spec()), UnsupportedSpecError);
}
