#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sal {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

/// Named symbolic parameters that may appear in coefficients.
enum class Param : std::uint8_t { eps, gamma, sigma, delta, beta, c, b, B, lambda };
inline constexpr std::size_t kParamCount = 9;

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

/// Sparse multivariate polynomial over Q in the parameters.
///
/// Monomials are exponent vectors ordered lexicographically with `eps` as
/// the most significant variable; the leading term is the largest one.
class Poly {
 public:
  using Exponents = std::array<std::uint8_t, kParamCount>;
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(const Rational& constant);
  static Poly variable(Param p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;
  bool depends_on(Param p) const;
  int degree(Param p) const;
  /// Leading (lex-largest) coefficient; zero polynomial has none.
  const Rational& leading_coefficient() const;

  /// Coefficient of p^k viewed as a polynomial in the remaining variables.
  Poly coefficient(Param p, int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& s) const;
  Poly pow(unsigned k) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Exact quotient; throws AlgebraError when `divisor` does not divide.
  Poly divide_exact(const Poly& divisor) const;
  /// Rescaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  /// Replace p by a polynomial.
  Poly substitute(Param p, const Poly& value) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

/// Monic greatest common divisor (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

/// Rational function in the parameters, kept in lowest terms with a monic
/// denominator, so structural equality is mathematical equality.
class ParamExpr {
 public:
  ParamExpr() : den_(Rational(1)) {}
  ParamExpr(long value);  // NOLINT(google-explicit-constructor)
  ParamExpr(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit ParamExpr(const Poly& numerator);
  static ParamExpr param(Param p) { return ParamExpr(Poly::variable(p)); }
  static ParamExpr ratio(const Poly& numerator, const Poly& denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> as_rational() const;
  bool depends_on(Param p) const { return num_.depends_on(p) || den_.depends_on(p); }

  ParamExpr operator-() const;
  ParamExpr& operator+=(const ParamExpr& o);
  ParamExpr& operator-=(const ParamExpr& o);
  ParamExpr& operator*=(const ParamExpr& o);
  ParamExpr& operator/=(const ParamExpr& o);
  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator*(ParamExpr a, const ParamExpr& b) { return a *= b; }
  friend ParamExpr operator/(ParamExpr a, const ParamExpr& b) { return a /= b; }
  friend bool operator==(const ParamExpr& a, const ParamExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ParamExpr inverse() const;
  ParamExpr pow(int k) const;
  ParamExpr substitute(Param p, const ParamExpr& value) const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

using ParamBinding = std::map<Param, ParamExpr>;

ParamExpr substitute(const ParamExpr& e, const ParamBinding& binding);

}  // namespace sal
