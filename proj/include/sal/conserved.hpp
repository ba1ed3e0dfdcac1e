#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sal/symmetry.hpp"

namespace sal {

struct ConservedVector {
  JetExpr c0;  // density
  JetExpr c1;  // flux
  std::optional<JetExpr> characteristic;
  /// False when v could not be eliminated (spec not strictly self-adjoint).
  bool local{true};
};

/// The generator failed the invariance test.
class NotASymmetryError : public Error {
 public:
  NotASymmetryError(const std::string& message, std::vector<Condition> conditions)
      : Error(message), conditions_(std::move(conditions)) {}
  const std::vector<Condition>& conditions() const { return conditions_; }

 private:
  std::vector<Condition> conditions_;
};

struct IbragimovOptions {
  /// Keep the xi^i*L summands. They vanish on solutions, but they are
  /// what makes the divergence an exact multiple of F.
  bool include_lagrangian = true;
  JetLimits limits{};
};

/// Conserved vector from a point symmetry and the formal Lagrangian,
/// W = eta - tau*u_t - xi*u_x. Derivatives of L with respect to an ordered
/// index sequence are the symmetric partial divided by the number of
/// orderings, which reproduces the 1/3-weighted u_txx/u_xtx/u_xxt terms.
/// v is replaced by u when the spec is strictly self-adjoint.
ConservedVector ibragimov_vector(const Generator& X, const EquationSpec& spec, const IbragimovOptions& options = {});

/// Moves total x-derivatives out of the density:
/// (c0, c1) -> (c0 - D_x P, c1 + D_t P) until no monomial of c0 can be
/// peeled, then drops density terms in x alone and flux terms in t alone.
/// Termination: each peel lowers the leading variable rank.
ConservedVector strip_trivial(const ConservedVector& C, const JetLimits& limits = {});

/// D_t c0 + D_x c1 divided by F (which is monic in u_t). Throws
/// NonConservationError on a nonzero remainder.
JetExpr characteristic_of(const ConservedVector& C, const EquationSpec& spec, const JetLimits& limits = {});

struct TableRow {
  std::string label;
  EquationSpec spec;
  JetExpr density;
  JetExpr flux;
  JetExpr characteristic;
};

/// Reduced density and flux from the scaling generator X_b (u d/du at b = 0).
/// Requires a self-adjoint power-law family member.
TableRow table_row(const EquationSpec& spec, const JetLimits& limits = {});

/// The six standard rows: BBM, Camassa-Holm, Novikov, Riemann (symbolic b,
/// gamma), b = 0 (symbolic eps, gamma, beta, c), b = -2 (symbolic eps,
/// gamma, beta).
std::vector<EquationSpec> table_specs();

}  // namespace sal
