#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sal/equation.hpp"

namespace sal {

/// Point symmetry tau*d/dt + xi*d/dx + eta*d/du.
struct Generator {
  std::string name;
  UCoeff tau;
  UCoeff xi;
  UCoeff eta;
};

Generator time_translation();
Generator space_translation();
/// X_b = u d/du - b t d/dt, the scaling (x, t, u) -> (x, l^-b t, l u).
Generator scaling(const ParamExpr& b);

struct ProlongedGenerator {
  Generator base;
  std::map<DerivIndex, JetExpr> zeta;  // u-coordinates of order 1..k
};

/// zeta_{J+i} = D_i(zeta_J) - D_i(tau) u_{J+t} - D_i(xi) u_{J+x}, zeta_0 = eta.
ProlongedGenerator prolong(const Generator& X, int k, const JetLimits& limits = {});

/// X^(k) applied to an expression of order <= k.
JetExpr apply(const ProlongedGenerator& X, const JetExpr& F);

struct InvarianceResult {
  std::optional<ParamExpr> lambda;
  std::vector<Condition> conditions;
  bool consistent{false};
  bool is_symmetry() const { return lambda.has_value() && consistent && conditions.empty(); }
};

/// X^(3)F matched against F: lambda and the coefficient conditions.
InvarianceResult invariance_residual(const Generator& X, const EquationSpec& spec, const JetLimits& limits = {});

struct ScalingFamily {
  UCoeff f;
  UCoeff g;
  UCoeff h;
  /// invariance conditions on the formal class the solution came from
  std::vector<Condition> conditions;
};

/// Solves the X_b invariance conditions on the formal class: returns
/// f = gamma*u^b, g = sigma*u^(b-1), h = delta*u^b.
ScalingFamily classify_scaling(const ParamExpr& b);

}  // namespace sal
