#pragma once

#include <random>

#include "sal/jet_expr.hpp"

namespace sal::fuzz {

struct RandomExpr {
  std::mt19937 rng;
  int max_order = 3;
  bool with_v = false;
  bool with_formal = true;
  bool with_coordinates = true;

  explicit RandomExpr(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  ParamExpr scalar() {
    static const Param params[] = {Param::eps, Param::gamma, Param::beta, Param::b};
    const int num = pick(8) - 4;
    ParamExpr c(make_rational(num >= 0 ? num + 1 : num, 1 + pick(3)));
    if (pick(3) == 0) c *= ParamExpr::param(params[pick(4)]);
    return c;
  }

  UCoeff coefficient() {
    static const AffineExp exponents[] = {AffineExp::constant(0),  AffineExp::constant(1),
                                          AffineExp::constant(2),  AffineExp::constant(-1),
                                          AffineExp::constant(make_rational(1, 2)), AffineExp::of_b(1),
                                          AffineExp::of_b(1, -1)};
    UCoeff c = UCoeff::power(exponents[pick(7)], scalar());
    if (pick(5) == 0) c = c * UCoeff::log_u();
    if (with_formal && pick(4) == 0) c = c * UCoeff::formal(static_cast<Formal>(pick(3)), pick(3));
    if (with_coordinates && pick(6) == 0) c = c * (pick(2) ? UCoeff::t() : UCoeff::x());
    return c;
  }

  DerivIndex coordinate() {
    for (;;) {
      const int t = pick(max_order + 1);
      const int x = pick(max_order + 1);
      if (t + x < 1 || t + x > max_order) continue;
      const Dep dep = with_v && pick(3) == 0 ? Dep::v : Dep::u;
      return {dep, static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(x)};
    }
  }

  JetExpr term(const JetLimits& limits) {
    JetExpr e(coefficient());
    const int factors = pick(3);
    for (int i = 0; i < factors; ++i) e = e * JetExpr::var(coordinate(), limits);
    return e;
  }

  JetExpr expr(const JetLimits& limits = {}) {
    JetExpr e;
    const int terms = 1 + pick(3);
    for (int i = 0; i < terms; ++i) e += term(limits);
    return e;
  }
};

}  // namespace sal::fuzz
