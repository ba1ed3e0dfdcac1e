#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sal/param_expr.hpp"

namespace sal {

/// Exponent of u of the form q + n*b (q rational, n integer, b the
/// scaling parameter). Closed under the sums that products of power laws
/// produce.
struct AffineExp {
  Rational q{0};
  long n{0};

  static AffineExp constant(const Rational& value) { return {value, 0}; }
  static AffineExp of_b(long n, const Rational& q = 0) { return {q, n}; }
  /// Converts q + n*b written as a ParamExpr; nullopt if not of that form.
  static std::optional<AffineExp> from_param(const ParamExpr& e);

  bool is_zero() const { return n == 0 && q == 0; }
  bool is_constant() const { return n == 0; }
  ParamExpr as_param() const;

  friend AffineExp operator+(const AffineExp& a, const AffineExp& b) { return {a.q + b.q, a.n + b.n}; }
  friend AffineExp operator-(const AffineExp& a, const AffineExp& b) { return {a.q - b.q, a.n - b.n}; }
  AffineExp scaled(long k) const { return {q * k, n * k}; }
  friend bool operator==(const AffineExp& a, const AffineExp& b) { return a.n == b.n && a.q == b.q; }
  friend std::strong_ordering operator<=>(const AffineExp& a, const AffineExp& b) {
    if (a.n != b.n) return a.n <=> b.n;
    const int c = cmp(a.q, b.q);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

/// Formal coefficient functions of the equation class.
enum class Formal : std::uint8_t { f, g, h };

struct FormalFactor {
  Formal symbol;
  std::uint8_t order;  // number of u-derivatives
  std::uint8_t power;
  friend auto operator<=>(const FormalFactor&, const FormalFactor&) = default;
};

struct UTermKey {
  std::vector<FormalFactor> formal;  // sorted by (symbol, order)
  AffineExp exponent;                // u^exponent
  std::uint16_t log_power{0};        // (ln u)^log_power
  std::uint8_t t_power{0};           // explicit t
  std::uint8_t x_power{0};           // explicit x
  friend auto operator<=>(const UTermKey&, const UTermKey&) = default;
  friend bool operator==(const UTermKey&, const UTermKey&) = default;

  bool is_unit() const {
    return formal.empty() && exponent.is_zero() && log_power == 0 && t_power == 0 && x_power == 0;
  }
};

UTermKey operator*(const UTermKey& a, const UTermKey& b);

/// Finite sum of ParamExpr * u^e * (ln u)^k * t^i * x^j * (formal factors).
/// The coefficient side of every jet monomial.
class UCoeff {
 public:
  using Terms = std::map<UTermKey, ParamExpr>;

  UCoeff() = default;
  UCoeff(const ParamExpr& constant);  // NOLINT(google-explicit-constructor)
  UCoeff(long constant) : UCoeff(ParamExpr(constant)) {}  // NOLINT(google-explicit-constructor)
  static UCoeff term(const UTermKey& key, const ParamExpr& coefficient);
  static UCoeff power(const AffineExp& e, const ParamExpr& coefficient = 1);
  static UCoeff u() { return power(AffineExp::constant(1)); }
  static UCoeff log_u();
  static UCoeff formal(Formal symbol, int order = 0);
  static UCoeff t();
  static UCoeff x();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the only term is the unit key (a pure parameter expression).
  bool is_constant() const;
  std::optional<ParamExpr> as_param() const;
  bool has_formal() const;
  bool has_formal(Formal symbol) const;
  /// Depends on t or x explicitly.
  bool has_explicit_coordinates() const;

  UCoeff operator-() const;
  UCoeff& operator+=(const UCoeff& o);
  UCoeff& operator-=(const UCoeff& o);
  friend UCoeff operator+(UCoeff a, const UCoeff& b) { return a += b; }
  friend UCoeff operator-(UCoeff a, const UCoeff& b) { return a -= b; }
  friend UCoeff operator*(const UCoeff& a, const UCoeff& b);
  UCoeff scaled(const ParamExpr& s) const;
  UCoeff pow(unsigned k) const;
  friend bool operator==(const UCoeff& a, const UCoeff& b) { return a.terms_ == b.terms_; }

  /// d/du, with d/du f^(k) = f^(k+1).
  UCoeff du() const;
  UCoeff dt_explicit() const;
  UCoeff dx_explicit() const;
  /// Antiderivative in u when it stays inside the algebra (power laws with
  /// ln u, or a single formal derivative); nullopt otherwise.
  std::optional<UCoeff> integrate_u() const;

  UCoeff substitute(const ParamBinding& binding) const;
  /// Replaces the formal symbol (and its derivatives) by a concrete value.
  UCoeff instantiate(Formal symbol, const UCoeff& value) const;

  /// Numeric value; requires rational coefficients and exponents, no formal symbols.
  double evaluate(double u, double t = 0.0, double x = 0.0) const;

 private:
  void add(const UTermKey& key, const ParamExpr& c);
  Terms terms_;
};

char formal_name(Formal f);

}  // namespace sal
