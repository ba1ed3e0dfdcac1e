#include <gtest/gtest.h>

#include "sal/format.hpp"
#include "sal/parser.hpp"
#include "sal/report.hpp"

using namespace sal;

namespace {

std::string field(const Fields& fields, const std::string& key) {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  ADD_FAILURE() << "missing " << key;
  return {};
}

}  // namespace

TEST(Report, ClassifyCamassaHolm) {
  const Fields f = parse_fields(emit_report(classify_report(camassa_holm()), ReportFormat::machine));
  EXPECT_EQ(field(f, "is_ssa"), "true");
  EXPECT_EQ(field(f, "lambda"), "-1");
  EXPECT_EQ(field(f, "c"), "0");
  EXPECT_EQ(field(f, "conditions"), "");
  EXPECT_EQ(field(f, "scaling.generator"), "X_1");
  EXPECT_EQ(field(f, "scaling.admitted"), "true");
  EXPECT_EQ(field(f, "scaling.lambda"), "2");
}

TEST(Report, MachineOutputIsDeterministic) {
  const std::string a = emit_report(table_report(), ReportFormat::machine);
  const std::string b = emit_report(table_report(), ReportFormat::machine);
  EXPECT_EQ(a, b);
}

TEST(Report, ExpressionFieldsReparse) {
  const Report t = table_report();
  ASSERT_EQ(t.results.size(), 18U);
  for (const auto& [k, v] : parse_fields(emit_report(t, ReportFormat::machine))) {
    if (k == "command" || k == "exit_status") continue;
    EXPECT_EQ(to_string(parse_jet(v)), v) << k;
  }
  const Fields c = parse_fields(emit_report(classify_report(formal_spec()), ReportFormat::machine));
  const std::vector<std::string> conditions = split_list(field(c, "conditions"));
  ASSERT_EQ(conditions.size(), 2U);
  for (const std::string& s : conditions) EXPECT_EQ(to_string(parse_jet(s)), s);
  EXPECT_EQ(to_string(parse_expr(field(c, "integrated_g"))), field(c, "integrated_g"));
}

TEST(Report, SpecEchoReparses) {
  const Fields f = parse_fields(emit_report(adjoint_report(novikov()), ReportFormat::machine));
  const EquationSpec s = parse_spec("epsilon: " + field(f, "spec.epsilon") + "\nf: " + field(f, "spec.f") +
                                    "\ng: " + field(f, "spec.g") + "\nh: " + field(f, "spec.h") + "\n");
  EXPECT_EQ(equation_expr(s), equation_expr(novikov()));
  EXPECT_EQ(field(f, "adjoint_at_v_eq_u"), to_string(-equation_expr(novikov())));
}

TEST(Report, ConserveRejectsNonSelfAdjoint) {
  EXPECT_THROW(conserve_report(b_equation(3), false), UnsupportedSpecError);
  const Fields f = parse_fields(emit_report(conserve_report(novikov(), false), ReportFormat::machine));
  EXPECT_EQ(field(f, "density"), "u^2 + u_x^2");
  EXPECT_EQ(field(f, "characteristic"), "2*u");
}

TEST(Report, SimulateConstantHasZeroDrift) {
  SimulationRequest req;
  req.init = InitKind::constant;
  req.n = 64;
  req.t_end = 0.05;
  const Fields f = parse_fields(emit_report(simulate_report(camassa_holm(), req), ReportFormat::machine));
  EXPECT_EQ(field(f, "relative_drift"), "0");
  EXPECT_EQ(field(f, "within_tolerance"), "true");
  EXPECT_EQ(field(f, "steps"), "50");
}

TEST(Report, Oracle) {
  const Fields f = parse_fields(emit_report(oracle_report({}), ReportFormat::machine));
  EXPECT_EQ(field(f, "t_star"), "1");
  EXPECT_EQ(field(f, "within_tolerance"), "true");
}

TEST(Report, TextFormatListsFields) {
  const std::string text = emit_report(classify_report(camassa_holm()), ReportFormat::text);
  EXPECT_NE(text.find("is_ssa"), std::string::npos);
  EXPECT_NE(text.find("(none)"), std::string::npos);
}
