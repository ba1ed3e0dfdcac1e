#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sal/jet_expr.hpp"

namespace sal {

/// Power-law member: f = gamma*u^b, g = sigma*u^(b-1), h = delta*u^b.
/// When beta is present the coefficients follow the self-adjoint family
/// sign convention sigma = -(b+1)*beta, delta = -(beta - c).
struct PowerLaw {
  ParamExpr b;
  ParamExpr gamma;
  ParamExpr sigma;
  ParamExpr delta;
  std::optional<ParamExpr> beta;
  std::optional<ParamExpr> c;
};

/// u_t + eps*u_txx + f(u)*u_x + g(u)*u_x*u_xx + h(u)*u_xxx = 0.
struct EquationSpec {
  std::string name;
  ParamExpr epsilon;
  UCoeff f;
  UCoeff g;
  UCoeff h;
  std::optional<PowerLaw> power_law;
};

/// Left-hand side F of the equation.
JetExpr equation_expr(const EquationSpec& spec);

/// u^e for an exponent affine in b; throws AlgebraError otherwise.
UCoeff u_power(const ParamExpr& e, const ParamExpr& coefficient = 1);

/// Fully formal member: symbolic eps, formal f, g, h.
EquationSpec formal_spec();
EquationSpec power_law_spec(const ParamExpr& eps, const ParamExpr& b, const ParamExpr& gamma,
                            const ParamExpr& sigma, const ParamExpr& delta);
/// Self-adjoint scale-invariant family (c only matters for b = 0).
EquationSpec family_spec(const ParamExpr& eps, const ParamExpr& b, const ParamExpr& gamma,
                         const ParamExpr& beta, const ParamExpr& c = 0);
EquationSpec camassa_holm();
EquationSpec novikov();
EquationSpec bbm();
EquationSpec riemann(const ParamExpr& b, const ParamExpr& gamma);
/// u_t - u_txx + (B+1)u u_x = B u_x u_xx + u u_xxx.
EquationSpec b_equation(const ParamExpr& B);

/// Flat "key: value" document; '#' starts a comment. Keys: name, epsilon
/// (or eps), f, g, h, b, gamma, beta, sigma, delta, c.
EquationSpec parse_spec(std::string_view text);

/// Canonical spec document (re-parseable by parse_spec).
std::string to_spec_text(const EquationSpec& spec);

}  // namespace sal
