#pragma once

#include <optional>
#include <vector>

#include "sal/equation.hpp"

namespace sal {

/// L = v*F. Mixed partials are identified, so the symmetrized
/// eps*(u_txx + u_xtx + u_xxt)/3 term is stored as eps*v*u_txx; the
/// conserved-vector construction restores the 1/3 weights per ordering.
JetExpr formal_lagrangian(const EquationSpec& spec);

/// F* = dL/du.
JetExpr adjoint(const EquationSpec& spec, const JetLimits& limits = {});

struct SsaVerdict {
  bool is_ssa{false};
  std::optional<ParamExpr> lambda;
  std::vector<Condition> conditions;
  /// u*g - (u*h)' when it is a constant.
  std::optional<ParamExpr> c_value;
  /// For formal specs: the integrated condition g = (u*h)'/u + c/u.
  std::optional<UCoeff> integrated_g;
};

/// F*|_{v=u} matched against F.
SsaVerdict strict_self_adjointness(const EquationSpec& spec, const JetLimits& limits = {});

/// Power-law split of the self-adjointness condition:
/// b != 0 needs sigma = delta*(b+1) and c = 0; b = 0 gives c = sigma - delta.
/// A symbolic b is treated as nonzero.
SsaVerdict check_power_law_family(const ParamExpr& b, const ParamExpr& sigma, const ParamExpr& delta);

/// u_t - u_txx + (b+2)u^b u_x = (b+1)u^(b-1) u_x u_xx + u^b u_xxx.
EquationSpec unified_family(const ParamExpr& b);

}  // namespace sal
