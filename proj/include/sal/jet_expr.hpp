#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sal/errors.hpp"
#include "sal/ucoeff.hpp"

namespace sal {

enum class Dep : std::uint8_t { u, v };
enum class Axis : std::uint8_t { t, x };

/// Jet coordinate d^{t+x} w / dt^t dx^x. Mixed partials are identified.
struct DerivIndex {
  Dep dep{Dep::u};
  std::uint8_t t{0};
  std::uint8_t x{0};

  int order() const { return t + x; }
  DerivIndex shifted(Axis a) const {
    DerivIndex out = *this;
    if (a == Axis::t) ++out.t;
    else ++out.x;
    return out;
  }

  friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
  /// Graded order: total order, then t, then x, then u < v.
  friend std::strong_ordering operator<=>(const DerivIndex& a, const DerivIndex& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.dep <=> b.dep;
  }
};

inline DerivIndex du(int t, int x) {
  return {Dep::u, static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(x)};
}
inline DerivIndex dv(int t, int x) {
  return {Dep::v, static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(x)};
}

std::string to_string(const DerivIndex& d);

struct JetLimits {
  int max_order = 6;
};

/// Product of jet coordinates with positive powers, kept sorted.
struct Monomial {
  std::vector<std::pair<DerivIndex, std::uint8_t>> factors;

  int degree() const;
  int max_order() const;
  unsigned power_of(const DerivIndex& d) const;
  bool contains(Dep dep) const;
  Monomial times(const DerivIndex& d, unsigned k = 1) const;
  /// Removes one power of d; d must be present.
  Monomial without(const DerivIndex& d) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded: total degree first, then lexicographic on factors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Canonical sum of UCoeff * Monomial. Bare u lives in the coefficient.
class JetExpr {
 public:
  using Terms = std::map<Monomial, UCoeff>;

  JetExpr() = default;
  JetExpr(const UCoeff& c);  // NOLINT(google-explicit-constructor)
  JetExpr(const ParamExpr& c) : JetExpr(UCoeff(c)) {}  // NOLINT(google-explicit-constructor)
  JetExpr(long c) : JetExpr(UCoeff(c)) {}  // NOLINT(google-explicit-constructor)
  /// A jet coordinate; order-0 u collapses to the coefficient u.
  static JetExpr var(const DerivIndex& d, const JetLimits& limits = {});
  static JetExpr term(const Monomial& m, const UCoeff& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_order() const;
  bool contains(Dep dep) const;
  /// Coefficient of an exact monomial (zero when absent).
  UCoeff coefficient(const Monomial& m) const;

  JetExpr operator-() const;
  JetExpr& operator+=(const JetExpr& o);
  JetExpr& operator-=(const JetExpr& o);
  friend JetExpr operator+(JetExpr a, const JetExpr& b) { return a += b; }
  friend JetExpr operator-(JetExpr a, const JetExpr& b) { return a -= b; }
  friend JetExpr operator*(const JetExpr& a, const JetExpr& b);
  JetExpr scaled(const UCoeff& c) const;
  JetExpr pow(unsigned k) const;
  friend bool operator==(const JetExpr& a, const JetExpr& b) { return a.terms_ == b.terms_; }

  /// Partial derivative with respect to a jet coordinate; du(0,0) acts on
  /// the coefficients.
  JetExpr partial(const DerivIndex& d) const;

  /// Applies fn to every coefficient and renormalizes.
  template <class Fn>
  JetExpr map_coefficients(Fn&& fn) const {
    JetExpr out;
    for (const auto& [m, c] : terms_) out.add(m, fn(c));
    return out;
  }

  JetExpr substitute(const ParamBinding& binding) const;
  JetExpr instantiate(Formal symbol, const UCoeff& value) const;

 private:
  void add(const Monomial& m, const UCoeff& c);
  Terms terms_;
};

// ---------------------------------------------------------------- raw trees

/// Unnormalized expression tree, as produced by the parser or by hand.
struct RawExpr {
  enum class Kind { sum, product, power, scalar, var, atom };
  Kind kind{Kind::scalar};
  std::vector<RawExpr> children;
  ParamExpr scalar;        // kind == scalar; exponent for kind == power
  DerivIndex var;          // kind == var
  UCoeff atom;             // kind == atom
  SourceSpan span;

  static RawExpr make_scalar(const ParamExpr& p, SourceSpan s = {});
  static RawExpr make_var(const DerivIndex& d, SourceSpan s = {});
  static RawExpr make_atom(const UCoeff& c, SourceSpan s = {});
  static RawExpr make_sum(std::vector<RawExpr> items, SourceSpan s = {});
  static RawExpr make_product(std::vector<RawExpr> items, SourceSpan s = {});
  static RawExpr make_power(RawExpr base, const ParamExpr& exponent, SourceSpan s = {});
};

/// Canonical form of a raw tree. Throws ParseError (with the offending
/// node's span) for powers outside the algebra and OrderOverflowError.
JetExpr normalize(const RawExpr& e, const JetLimits& limits = {});

// ---------------------------------------------------------------- calculus

JetExpr total_derivative(const JetExpr& e, Axis axis, const JetLimits& limits = {});
/// Euler operator dE/dw.
JetExpr variational_derivative(const JetExpr& e, Dep w, const JetLimits& limits = {});
/// Replaces every v-coordinate by the u-coordinate of the same orders.
JetExpr substitute_dependent(const JetExpr& e);

struct Condition {
  Monomial monomial;   // jet monomial the coefficient belongs to
  UCoeff coefficient;  // must vanish
};

struct MatchResult {
  ParamExpr lambda;
  Monomial pivot;
  std::vector<Condition> conditions;
  /// False when some condition cannot vanish for any parameter values.
  bool consistent{true};
};

/// Solves a = lambda*b on a pivot monomial of b (u_t preferred) and
/// reports the remaining coefficient conditions. Always returns a result
/// when a pivot exists; nullopt when no pivot has a parameter-only
/// coefficient on both sides.
std::optional<MatchResult> match_pivot(const JetExpr& a, const JetExpr& b);

/// match_pivot, additionally rejecting inconsistent matches.
std::optional<MatchResult> match_multiple(const JetExpr& a, const JetExpr& b);

/// True when a coefficient can never vanish: nonzero with no parameters
/// and no formal symbols.
bool is_obstruction(const UCoeff& c);

}  // namespace sal
