#include "sal/conserved.hpp"

#include <algorithm>
#include <tuple>

#include "sal/adjoint.hpp"
#include "sal/format.hpp"

namespace sal {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

JetExpr derive(JetExpr e, int t, int x, const JetLimits& limits) {
  for (int i = 0; i < t; ++i) e = total_derivative(e, Axis::t, limits);
  for (int i = 0; i < x; ++i) e = total_derivative(e, Axis::x, limits);
  return e;
}

}  // namespace

ConservedVector ibragimov_vector(const Generator& X, const EquationSpec& spec, const IbragimovOptions& options) {
  const JetLimits& limits = options.limits;
  const InvarianceResult inv = invariance_residual(X, spec, limits);
  if (!inv.is_symmetry()) {
    throw NotASymmetryError(X.name + " is not a symmetry of " + spec.name, inv.conditions);
  }
  const JetExpr L = formal_lagrangian(spec);
  const JetExpr W = JetExpr(X.eta) - JetExpr(X.tau) * JetExpr::var(du(1, 0), limits) -
                    JetExpr(X.xi) * JetExpr::var(du(0, 1), limits);
  const int max_order = L.max_order();

  std::map<std::pair<int, int>, JetExpr> dw;
  auto DW = [&](int t, int x) -> const JetExpr& {
    auto it = dw.find({t, x});
    if (it == dw.end()) it = dw.emplace(std::pair{t, x}, derive(W, t, x, limits)).first;
    return it->second;
  };

  JetExpr components[2];
  for (int axis = 0; axis < 2; ++axis) {
    JetExpr& C = components[axis];
    if (options.include_lagrangian) C += JetExpr(axis == 0 ? X.tau : X.xi) * L;
    for (int m = 0; m < max_order; ++m) {
      for (unsigned bits = 0; bits < (1U << m); ++bits) {
        // sequence j_1..j_m: bit set means x
        std::vector<Axis> seq(m);
        int t_total = axis == 0 ? 1 : 0;
        int x_total = axis == 1 ? 1 : 0;
        for (int k = 0; k < m; ++k) {
          seq[k] = (bits >> k) & 1U ? Axis::x : Axis::t;
          (seq[k] == Axis::x ? x_total : t_total)++;
        }
        JetExpr P = L.partial(du(t_total, x_total));
        if (P.is_zero()) continue;
        P = P.scaled(UCoeff(make_rational(1, binomial(t_total + x_total, t_total))));
        for (int r = 0; r <= m; ++r) {
          int lt = 0;
          int lx = 0;
          for (int k = 0; k < r; ++k) (seq[k] == Axis::x ? lx : lt)++;
          int rt = 0;
          int rx = 0;
          for (int k = r; k < m; ++k) (seq[k] == Axis::x ? rx : rt)++;
          const JetExpr piece = DW(lt, lx) * derive(P, rt, rx, limits);
          if ((m - r) % 2 == 1) C -= piece;
          else C += piece;
        }
      }
    }
  }

  ConservedVector out{components[0], components[1], std::nullopt, false};
  if (strict_self_adjointness(spec, limits).is_ssa) {
    out.c0 = substitute_dependent(out.c0);
    out.c1 = substitute_dependent(out.c1);
    out.local = true;
  }
  return out;
}

// ---------------------------------------------------------------- strip_trivial

namespace {

using Rank = std::tuple<int, int, int>;

Rank rank(const DerivIndex& d) { return {d.x, d.t, static_cast<int>(d.dep)}; }

/// Antiderivative P with D_x P containing the given term, or nullopt.
std::optional<JetExpr> peel(const Monomial& m, const UCoeff& c) {
  if (m.factors.empty()) return std::nullopt;
  const auto top = std::max_element(m.factors.begin(), m.factors.end(),
                                    [](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
  const DerivIndex J = top->first;
  if (top->second != 1 || J.x == 0) return std::nullopt;
  DerivIndex K = J;
  --K.x;
  for (const auto& [d, p] : m.factors) {
    if (d != J && d != K && rank(d) > rank(K)) return std::nullopt;
  }
  const Monomial rest = m.without(J);
  if (K.dep == Dep::u && K.order() == 0) {
    // c(u, t, x) u_x: integrate in u
    if (!rest.factors.empty()) return std::nullopt;
    auto integral = c.integrate_u();
    if (!integral) return std::nullopt;
    return JetExpr(*integral);
  }
  const unsigned p = rest.power_of(K);
  Monomial others = rest;
  for (unsigned i = 0; i < p; ++i) others = others.without(K);
  return JetExpr::term(others.times(K, p + 1), c.scaled(make_rational(1, p + 1)));
}

/// Terms of a component that depend on nothing but the given coordinate
/// (no u, no jet variables) have zero divergence contribution.
JetExpr drop_null_terms(const JetExpr& e, Axis kept) {
  JetExpr out;
  for (const auto& [m, c] : e.terms()) {
    UCoeff live;
    for (const auto& [key, coeff] : c.terms()) {
      const bool null = m.factors.empty() && key.formal.empty() && key.exponent.is_zero() && key.log_power == 0 &&
                        (kept == Axis::t ? key.x_power == 0 : key.t_power == 0);
      if (!null) live += UCoeff::term(key, coeff);
    }
    out += JetExpr::term(m, live);
  }
  return out;
}

}  // namespace

ConservedVector strip_trivial(const ConservedVector& C, const JetLimits& limits) {
  ConservedVector out = C;
  for (int guard = 0; guard < 100000; ++guard) {
    std::optional<JetExpr> P;
    // highest-ranked peelable term first (terms are ordered by monomial)
    for (auto it = out.c0.terms().rbegin(); it != out.c0.terms().rend() && !P; ++it) {
      P = peel(it->first, it->second);
    }
    if (!P) {
      out.c0 = drop_null_terms(out.c0, Axis::x);
      out.c1 = drop_null_terms(out.c1, Axis::t);
      return out;
    }
    out.c0 -= total_derivative(*P, Axis::x, limits);
    out.c1 += total_derivative(*P, Axis::t, limits);
  }
  throw AlgebraError("strip_trivial did not terminate");
}

JetExpr characteristic_of(const ConservedVector& C, const EquationSpec& spec, const JetLimits& limits) {
  if (C.c0.contains(Dep::v) || C.c1.contains(Dep::v)) {
    throw NonConservationError("characteristic requires a local (v-free) conserved vector");
  }
  const JetExpr F = equation_expr(spec);
  const DerivIndex ut = du(1, 0);
  JetExpr rem = total_derivative(C.c0, Axis::t, limits) + total_derivative(C.c1, Axis::x, limits);
  JetExpr lambda;
  for (int guard = 0; guard < 100000; ++guard) {
    std::optional<std::pair<Monomial, UCoeff>> lead;
    for (const auto& [m, c] : rem.terms()) {
      if (m.power_of(ut) > 0) {
        lead = {m, c};
        break;
      }
    }
    if (!lead) break;
    const JetExpr q = JetExpr::term(lead->first.without(ut), lead->second);
    lambda += q;
    rem -= q * F;
  }
  if (!rem.is_zero()) {
    throw NonConservationError("divergence is not a multiple of F; remainder " + to_string(rem));
  }
  return lambda;
}

// ---------------------------------------------------------------- table

TableRow table_row(const EquationSpec& spec, const JetLimits& limits) {
  if (!spec.power_law || !spec.power_law->beta) {
    throw UnsupportedSpecError(spec.name + " is not a member of the self-adjoint scale-invariant family");
  }
  if (!strict_self_adjointness(spec, limits).is_ssa) {
    throw UnsupportedSpecError(spec.name + " is not strictly self-adjoint");
  }
  Generator X = scaling(spec.power_law->b);
  if (spec.power_law->b.is_zero()) X.name = "u d/du";
  IbragimovOptions options;
  options.limits = limits;
  const ConservedVector reduced = strip_trivial(ibragimov_vector(X, spec, options), limits);
  TableRow row{spec.name, spec, reduced.c0, reduced.c1, characteristic_of(reduced, spec, limits)};
  return row;
}

std::vector<EquationSpec> table_specs() {
  const ParamExpr eps = ParamExpr::param(Param::eps);
  const ParamExpr b = ParamExpr::param(Param::b);
  const ParamExpr gamma = ParamExpr::param(Param::gamma);
  const ParamExpr beta = ParamExpr::param(Param::beta);
  const ParamExpr c = ParamExpr::param(Param::c);
  EquationSpec b0 = family_spec(eps, 0, gamma, beta, c);
  b0.name = "b=0";
  EquationSpec bm2 = family_spec(eps, -2, gamma, beta);
  bm2.name = "b=-2";
  return {bbm(), camassa_holm(), novikov(), riemann(b, gamma), b0, bm2};
}

}  // namespace sal
