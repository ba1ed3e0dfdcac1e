#include "sal/param_expr.hpp"

#include <algorithm>
#include <utility>

#include "sal/errors.hpp"

namespace sal {

namespace {

constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "eps", "gamma", "sigma", "delta", "beta", "c", "b", "B", "lambda"};

std::size_t index(Param p) { return static_cast<std::size_t>(p); }

}  // namespace

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string_view param_name(Param p) { return kParamNames[index(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(Param p) {
  Poly out;
  Exponents e{};
  e[index(p)] = 1;
  out.terms_.emplace(e, Rational(1));
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::depends_on(Param p) const { return degree(p) > 0; }

int Poly::degree(Param p) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[index(p)]);
  return d;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Poly Poly::coefficient(Param p, int k) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e[index(p)] != k) continue;
    Exponents rest = e;
    rest[index(p)] = 0;
    out.terms_.emplace(rest, c);
  }
  return out;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e{};
      for (std::size_t i = 0; i < kParamCount; ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw AlgebraError("parameter degree overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly out(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw AlgebraError("division by zero polynomial");
  if (divisor.is_constant()) return scaled(1 / divisor.constant_value());
  Poly quotient;
  Poly rest = *this;
  const auto& [de, dc] = *divisor.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.rbegin();
    Exponents e{};
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (re[i] < de[i]) throw AlgebraError("inexact polynomial division");
      e[i] = static_cast<std::uint8_t>(re[i] - de[i]);
    }
    Poly step;
    step.terms_.emplace(e, rc / dc);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

Poly Poly::substitute(Param p, const Poly& value) const {
  if (!depends_on(p)) return *this;
  std::vector<Poly> powers{Poly(Rational(1))};
  Poly out;
  for (const auto& [e, c] : terms_) {
    const int k = e[index(p)];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[index(p)] = 0;
    Poly mono;
    mono.terms_.emplace(rest, c);
    out += mono * powers[k];
  }
  return out;
}

// ---------------------------------------------------------------- gcd

namespace {

std::optional<Param> first_variable(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    if (a.depends_on(p) || b.depends_on(p)) return p;
  }
  return std::nullopt;
}

Poly content(const Poly& a, Param x) {
  Poly g;
  const int d = a.degree(x);
  for (int k = d; k >= 0; --k) {
    Poly c = a.coefficient(x, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& a, Param x) { return a.divide_exact(content(a, x)); }

Poly monomial_power(Param x, int k) {
  Poly out(Rational(1));
  for (int i = 0; i < k; ++i) out = out * Poly::variable(x);
  return out;
}

/// Pseudo-remainder of a by b with respect to x.
Poly pseudo_remainder(Poly a, const Poly& b, Param x) {
  const int db = b.degree(x);
  const Poly lb = b.coefficient(x, db);
  while (!a.is_zero() && a.degree(x) >= db) {
    const int da = a.degree(x);
    const Poly la = a.coefficient(x, da);
    a = lb * a - la * monomial_power(x, da - db) * b;
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
  const Param x = *first_variable(a, b);
  if (!a.depends_on(x)) return gcd(a, content(b, x));
  if (!b.depends_on(x)) return gcd(content(a, x), b);

  const Poly ca = content(a, x);
  const Poly cb = content(b, x);
  Poly pa = a.divide_exact(ca);
  Poly pb = b.divide_exact(cb);
  const Poly g_content = gcd(ca, cb);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) {
      pa = Poly(Rational(1));
      break;
    }
    pb = primitive_part(r, x);
  }
  const Poly g_prim = pa.depends_on(x) ? primitive_part(pa, x) : Poly(Rational(1));
  return (g_content * g_prim).monic();
}

// ---------------------------------------------------------------- ParamExpr

ParamExpr::ParamExpr(long value) : num_(Rational(value)), den_(Rational(1)) {}

ParamExpr::ParamExpr(const Rational& value) : num_(value), den_(Rational(1)) {}

ParamExpr::ParamExpr(const Poly& numerator) : num_(numerator), den_(Rational(1)) {}

ParamExpr ParamExpr::ratio(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw AlgebraError("parameter expression divided by zero");
  ParamExpr out;
  out.num_ = numerator;
  out.den_ = denominator;
  out.canonicalize();
  return out;
}

void ParamExpr::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

std::optional<Rational> ParamExpr::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_value();
}

ParamExpr ParamExpr::operator-() const {
  ParamExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = Poly(Rational(1));
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& o) { return *this += -o; }

ParamExpr& ParamExpr::operator*=(const ParamExpr& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ParamExpr();
  num_ = num_ * o.num_;
  if (den_.is_constant() && o.den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

ParamExpr& ParamExpr::operator/=(const ParamExpr& o) { return *this *= o.inverse(); }

ParamExpr ParamExpr::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero parameter expression");
  return ratio(den_, num_);
}

ParamExpr ParamExpr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ParamExpr out(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

ParamExpr ParamExpr::substitute(Param p, const ParamExpr& value) const {
  if (!depends_on(p)) return *this;
  auto eval = [&](const Poly& poly) {
    ParamExpr out;
    for (const auto& [e, c] : poly.terms()) {
      Poly::Exponents rest = e;
      const int k = rest[index(p)];
      rest[index(p)] = 0;
      Poly mono;
      mono += Poly(c) * [&] {
        Poly m(Rational(1));
        for (std::size_t i = 0; i < kParamCount; ++i) {
          for (int j = 0; j < rest[i]; ++j) m = m * Poly::variable(static_cast<Param>(i));
        }
        return m;
      }();
      out += ParamExpr(mono) * value.pow(k);
    }
    return out;
  };
  return eval(num_) / eval(den_);
}

ParamExpr substitute(const ParamExpr& e, const ParamBinding& binding) {
  ParamExpr out = e;
  for (const auto& [p, v] : binding) out = out.substitute(p, v);
  return out;
}

}  // namespace sal
