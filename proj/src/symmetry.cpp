#include "sal/symmetry.hpp"

#include "sal/format.hpp"

namespace sal {

Generator time_translation() { return {"d/dt", UCoeff(1), UCoeff(), UCoeff()}; }

Generator space_translation() { return {"d/dx", UCoeff(), UCoeff(1), UCoeff()}; }

Generator scaling(const ParamExpr& b) {
  return {"X_b", UCoeff::t().scaled(-b), UCoeff(), UCoeff::u()};
}

ProlongedGenerator prolong(const Generator& X, int k, const JetLimits& limits) {
  if (k < 1 || k > limits.max_order) throw OrderOverflowError(k, limits.max_order);
  // one order of head-room for the u_{J+i} factors of the recursion
  const JetLimits inner{std::max(limits.max_order, k + 1)};
  ProlongedGenerator out{X, {}};
  const JetExpr tau(X.tau);
  const JetExpr xi(X.xi);
  const JetExpr dtau[2] = {total_derivative(tau, Axis::t, inner), total_derivative(tau, Axis::x, inner)};
  const JetExpr dxi[2] = {total_derivative(xi, Axis::t, inner), total_derivative(xi, Axis::x, inner)};
  const JetExpr eta(X.eta);
  auto zeta_of = [&](const DerivIndex& J) -> const JetExpr& {
    return J.order() == 0 ? eta : out.zeta.at(J);
  };
  for (int order = 1; order <= k; ++order) {
    for (int t = order; t >= 0; --t) {
      const DerivIndex J = du(t, order - t);
      const Axis axis = t > 0 ? Axis::t : Axis::x;
      DerivIndex parent = J;
      if (axis == Axis::t) --parent.t;
      else --parent.x;
      const int a = axis == Axis::t ? 0 : 1;
      out.zeta[J] = total_derivative(zeta_of(parent), axis, inner) -
                    dtau[a] * JetExpr::var(parent.shifted(Axis::t), inner) -
                    dxi[a] * JetExpr::var(parent.shifted(Axis::x), inner);
    }
  }
  return out;
}

JetExpr apply(const ProlongedGenerator& X, const JetExpr& F) {
  JetExpr out = JetExpr(X.base.eta) * F.partial(du(0, 0));
  out += JetExpr(X.base.tau) * F.map_coefficients([](const UCoeff& c) { return c.dt_explicit(); });
  out += JetExpr(X.base.xi) * F.map_coefficients([](const UCoeff& c) { return c.dx_explicit(); });
  for (const auto& [J, zeta] : X.zeta) {
    const JetExpr dF = F.partial(J);
    if (!dF.is_zero()) out += zeta * dF;
  }
  return out;
}

InvarianceResult invariance_residual(const Generator& X, const EquationSpec& spec, const JetLimits& limits) {
  const JetExpr F = equation_expr(spec);
  const JetExpr XF = apply(prolong(X, F.max_order(), limits), F);
  InvarianceResult out;
  auto m = match_pivot(XF, F);
  if (!m) return out;
  out.lambda = m->lambda;
  out.conditions = std::move(m->conditions);
  out.consistent = m->consistent;
  return out;
}

namespace {

/// Solves A*u*s' + B*s = 0 for a single formal symbol s: s = K*u^(-B/A).
UCoeff solve_first_order(const UCoeff& condition, Formal symbol, const ParamExpr& constant) {
  ParamExpr A;
  ParamExpr B;
  for (const auto& [key, c] : condition.terms()) {
    const bool plain = key.log_power == 0 && key.t_power == 0 && key.x_power == 0 && key.formal.size() == 1 &&
                       key.formal[0].symbol == symbol && key.formal[0].power == 1;
    if (plain && key.formal[0].order == 1 && key.exponent == AffineExp::constant(1)) {
      A += c;
    } else if (plain && key.formal[0].order == 0 && key.exponent.is_zero()) {
      B += c;
    } else {
      throw AlgebraError("condition " + to_string(condition) + " is not of the form A*u*s' + B*s");
    }
  }
  if (A.is_zero()) throw AlgebraError("condition " + to_string(condition) + " is not a differential condition");
  return u_power(-B / A, constant);
}

}  // namespace

ScalingFamily classify_scaling(const ParamExpr& b) {
  const InvarianceResult r = invariance_residual(scaling(b), formal_spec());
  ScalingFamily out;
  out.conditions = r.conditions;
  for (const Condition& c : r.conditions) {
    if (c.coefficient.has_formal(Formal::f)) {
      out.f = solve_first_order(c.coefficient, Formal::f, ParamExpr::param(Param::gamma));
    } else if (c.coefficient.has_formal(Formal::g)) {
      out.g = solve_first_order(c.coefficient, Formal::g, ParamExpr::param(Param::sigma));
    } else if (c.coefficient.has_formal(Formal::h)) {
      out.h = solve_first_order(c.coefficient, Formal::h, ParamExpr::param(Param::delta));
    }
  }
  return out;
}

}  // namespace sal
