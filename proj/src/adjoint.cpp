#include "sal/adjoint.hpp"

namespace sal {

JetExpr formal_lagrangian(const EquationSpec& spec) { return JetExpr::var(dv(0, 0)) * equation_expr(spec); }

JetExpr adjoint(const EquationSpec& spec, const JetLimits& limits) {
  return variational_derivative(formal_lagrangian(spec), Dep::u, limits);
}

namespace {

UCoeff inverse_u() { return UCoeff::power(AffineExp::constant(-1)); }

}  // namespace

SsaVerdict strict_self_adjointness(const EquationSpec& spec, const JetLimits& limits) {
  const JetExpr F = equation_expr(spec);
  const JetExpr adj = substitute_dependent(adjoint(spec, limits));
  SsaVerdict out;
  auto m = match_pivot(adj, F);
  if (!m) return out;
  out.lambda = m->lambda;
  out.conditions = std::move(m->conditions);
  out.is_ssa = m->consistent && out.conditions.empty();

  const UCoeff u = UCoeff::u();
  const UCoeff c = u * spec.g - (u * spec.h).du();
  if (c.is_constant()) out.c_value = c.as_param();
  if (spec.g.has_formal(Formal::g)) {
    out.integrated_g = (u * spec.h).du() * inverse_u() + inverse_u().scaled(ParamExpr::param(Param::c));
  }
  return out;
}

SsaVerdict check_power_law_family(const ParamExpr& b, const ParamExpr& sigma, const ParamExpr& delta) {
  SsaVerdict out;
  out.lambda = ParamExpr(-1);
  const Monomial uxuxx = Monomial{}.times(du(0, 1)).times(du(0, 2));
  if (b.is_zero()) {
    out.is_ssa = true;
    out.c_value = sigma - delta;
    return out;
  }
  const ParamExpr r = sigma - delta * (b + 1);
  if (!r.is_zero()) out.conditions.push_back({uxuxx, UCoeff(r)});
  out.is_ssa = out.conditions.empty();
  if (out.is_ssa) out.c_value = ParamExpr(0);
  return out;
}

EquationSpec unified_family(const ParamExpr& b) {
  EquationSpec s = family_spec(-1, b, b + 2, 1);
  s.name = "unified";
  return s;
}

}  // namespace sal
