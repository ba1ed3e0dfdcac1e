#include "sal/ucoeff.hpp"

#include <cmath>

#include "sal/errors.hpp"

namespace sal {

std::optional<AffineExp> AffineExp::from_param(const ParamExpr& e) {
  if (!e.denominator().is_constant()) return std::nullopt;
  AffineExp out;
  for (const auto& [exps, c] : e.numerator().terms()) {
    int total = 0;
    for (auto k : exps) total += k;
    if (total == 0) {
      out.q = c;
      continue;
    }
    Poly::Exponents b_only{};
    b_only[static_cast<std::size_t>(Param::b)] = 1;
    if (exps != b_only || c.get_den() != 1) return std::nullopt;
    out.n = c.get_num().get_si();
  }
  return out;
}

ParamExpr AffineExp::as_param() const {
  return ParamExpr(q) + ParamExpr(n) * ParamExpr::param(Param::b);
}

UTermKey operator*(const UTermKey& a, const UTermKey& b) {
  UTermKey out;
  out.exponent = a.exponent + b.exponent;
  out.log_power = static_cast<std::uint16_t>(a.log_power + b.log_power);
  out.t_power = static_cast<std::uint8_t>(a.t_power + b.t_power);
  out.x_power = static_cast<std::uint8_t>(a.x_power + b.x_power);
  auto ia = a.formal.begin();
  auto ib = b.formal.begin();
  while (ia != a.formal.end() || ib != b.formal.end()) {
    if (ib == b.formal.end() ||
        (ia != a.formal.end() && std::tie(ia->symbol, ia->order) < std::tie(ib->symbol, ib->order))) {
      out.formal.push_back(*ia++);
    } else if (ia == a.formal.end() ||
               std::tie(ib->symbol, ib->order) < std::tie(ia->symbol, ia->order)) {
      out.formal.push_back(*ib++);
    } else {
      out.formal.push_back({ia->symbol, ia->order, static_cast<std::uint8_t>(ia->power + ib->power)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

char formal_name(Formal f) {
  switch (f) {
    case Formal::f: return 'f';
    case Formal::g: return 'g';
    case Formal::h: return 'h';
  }
  return '?';
}

UCoeff::UCoeff(const ParamExpr& constant) {
  if (!constant.is_zero()) terms_.emplace(UTermKey{}, constant);
}

UCoeff UCoeff::term(const UTermKey& key, const ParamExpr& coefficient) {
  UCoeff out;
  out.add(key, coefficient);
  return out;
}

UCoeff UCoeff::power(const AffineExp& e, const ParamExpr& coefficient) {
  UTermKey key;
  key.exponent = e;
  return term(key, coefficient);
}

UCoeff UCoeff::log_u() {
  UTermKey key;
  key.log_power = 1;
  return term(key, 1);
}

UCoeff UCoeff::formal(Formal symbol, int order) {
  UTermKey key;
  key.formal.push_back({symbol, static_cast<std::uint8_t>(order), 1});
  return term(key, 1);
}

UCoeff UCoeff::t() {
  UTermKey key;
  key.t_power = 1;
  return term(key, 1);
}

UCoeff UCoeff::x() {
  UTermKey key;
  key.x_power = 1;
  return term(key, 1);
}

void UCoeff::add(const UTermKey& key, const ParamExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool UCoeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<ParamExpr> UCoeff::as_param() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? ParamExpr() : terms_.begin()->second;
}

bool UCoeff::has_formal() const {
  for (const auto& [k, c] : terms_) {
    if (!k.formal.empty()) return true;
  }
  return false;
}

bool UCoeff::has_formal(Formal symbol) const {
  for (const auto& [k, c] : terms_) {
    for (const auto& f : k.formal) {
      if (f.symbol == symbol) return true;
    }
  }
  return false;
}

bool UCoeff::has_explicit_coordinates() const {
  for (const auto& [k, c] : terms_) {
    if (k.t_power > 0 || k.x_power > 0) return true;
  }
  return false;
}

UCoeff UCoeff::operator-() const {
  UCoeff out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

UCoeff& UCoeff::operator+=(const UCoeff& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

UCoeff& UCoeff::operator-=(const UCoeff& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

UCoeff operator*(const UCoeff& a, const UCoeff& b) {
  UCoeff out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add(ka * kb, ca * cb);
  }
  return out;
}

UCoeff UCoeff::scaled(const ParamExpr& s) const {
  if (s.is_zero()) return UCoeff();
  UCoeff out = *this;
  for (auto& [k, c] : out.terms_) c *= s;
  return out;
}

UCoeff UCoeff::pow(unsigned k) const {
  UCoeff out(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

UCoeff UCoeff::du() const {
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    // formal factors
    for (std::size_t i = 0; i < key.formal.size(); ++i) {
      UTermKey k = key;
      const FormalFactor ff = key.formal[i];
      if (ff.power == 1) {
        k.formal.erase(k.formal.begin() + static_cast<long>(i));
      } else {
        k.formal[i].power = static_cast<std::uint8_t>(ff.power - 1);
      }
      UTermKey next;
      next.formal.push_back({ff.symbol, static_cast<std::uint8_t>(ff.order + 1), 1});
      out.add(k * next, c * ParamExpr(static_cast<long>(ff.power)));
    }
    // u^e
    if (!key.exponent.is_zero()) {
      UTermKey k = key;
      k.exponent = key.exponent - AffineExp::constant(1);
      out.add(k, c * key.exponent.as_param());
    }
    // (ln u)^k
    if (key.log_power > 0) {
      UTermKey k = key;
      k.log_power = static_cast<std::uint16_t>(key.log_power - 1);
      k.exponent = key.exponent - AffineExp::constant(1);
      out.add(k, c * ParamExpr(static_cast<long>(key.log_power)));
    }
  }
  return out;
}

UCoeff UCoeff::dt_explicit() const {
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    if (key.t_power == 0) continue;
    UTermKey k = key;
    k.t_power = static_cast<std::uint8_t>(key.t_power - 1);
    out.add(k, c * ParamExpr(static_cast<long>(key.t_power)));
  }
  return out;
}

UCoeff UCoeff::dx_explicit() const {
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    if (key.x_power == 0) continue;
    UTermKey k = key;
    k.x_power = static_cast<std::uint8_t>(key.x_power - 1);
    out.add(k, c * ParamExpr(static_cast<long>(key.x_power)));
  }
  return out;
}

namespace {

// Antiderivative of u^e (ln u)^k, e given as affine exponent.
std::optional<UCoeff> integrate_power_log(const AffineExp& e, int k) {
  UTermKey base;
  if (e.n == 0 && e.q == -1) {
    base.log_power = static_cast<std::uint16_t>(k + 1);
    return UCoeff::term(base, make_rational(1, k + 1));
  }
  // int u^e L^k = u^{e+1} L^k / (e+1) - k/(e+1) int u^e L^{k-1}
  const ParamExpr inv = (e + AffineExp::constant(1)).as_param().inverse();
  UCoeff out;
  ParamExpr factor = inv;
  for (int j = k; j >= 0; --j) {
    UTermKey key;
    key.exponent = e + AffineExp::constant(1);
    key.log_power = static_cast<std::uint16_t>(j);
    out += UCoeff::term(key, factor);
    factor = factor * ParamExpr(-j) * inv;
  }
  return out;
}

}  // namespace

std::optional<UCoeff> UCoeff::integrate_u() const {
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    UTermKey coords;
    coords.t_power = key.t_power;
    coords.x_power = key.x_power;
    if (!key.formal.empty()) {
      if (key.formal.size() != 1 || key.formal[0].power != 1 || key.formal[0].order == 0 ||
          !key.exponent.is_zero() || key.log_power != 0) {
        return std::nullopt;
      }
      UTermKey k = coords;
      k.formal.push_back({key.formal[0].symbol, static_cast<std::uint8_t>(key.formal[0].order - 1), 1});
      out.add(k, c);
      continue;
    }
    auto piece = integrate_power_log(key.exponent, key.log_power);
    if (!piece) return std::nullopt;
    out += (*piece * UCoeff::term(coords, 1)).scaled(c);
  }
  return out;
}

UCoeff UCoeff::substitute(const ParamBinding& binding) const {
  std::optional<Rational> b_value;
  bool b_bound = false;
  if (auto it = binding.find(Param::b); it != binding.end()) {
    b_bound = true;
    b_value = it->second.as_rational();
  }
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    UTermKey k = key;
    if (b_bound && key.exponent.n != 0) {
      if (!b_value) throw AlgebraError("exponent parameter b must be bound to a rational value");
      k.exponent = AffineExp::constant(key.exponent.q + key.exponent.n * *b_value);
    }
    out.add(k, sal::substitute(c, binding));
  }
  return out;
}

UCoeff UCoeff::instantiate(Formal symbol, const UCoeff& value) const {
  std::vector<UCoeff> derivatives{value};
  UCoeff out;
  for (const auto& [key, c] : terms_) {
    UTermKey rest = key;
    rest.formal.clear();
    UCoeff product = UCoeff::term(rest, c);
    for (const auto& ff : key.formal) {
      if (ff.symbol != symbol) {
        UTermKey k;
        k.formal.push_back(ff);
        product = product * UCoeff::term(k, 1);
        continue;
      }
      while (derivatives.size() <= ff.order) derivatives.push_back(derivatives.back().du());
      product = product * derivatives[ff.order].pow(ff.power);
    }
    out += product;
  }
  return out;
}

double UCoeff::evaluate(double u, double t, double x) const {
  double sum = 0.0;
  for (const auto& [key, c] : terms_) {
    if (!key.formal.empty()) throw AlgebraError("cannot evaluate formal coefficient functions");
    if (key.exponent.n != 0) throw AlgebraError("cannot evaluate symbolic exponent");
    auto cv = c.as_rational();
    if (!cv) throw AlgebraError("cannot evaluate symbolic parameters");
    double v = cv->get_d();
    if (key.exponent.q != 0) {
      const double e = key.exponent.q.get_d();
      v *= (key.exponent.q.get_den() == 1) ? std::pow(u, static_cast<int>(key.exponent.q.get_num().get_si()))
                                           : std::pow(u, e);
    }
    if (key.log_power > 0) v *= std::pow(std::log(u), key.log_power);
    if (key.t_power > 0) v *= std::pow(t, key.t_power);
    if (key.x_power > 0) v *= std::pow(x, key.x_power);
    sum += v;
  }
  return sum;
}

}  // namespace sal
