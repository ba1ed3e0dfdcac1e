#include "sal/jet_expr.hpp"

#include <algorithm>

namespace sal {

std::string to_string(const DerivIndex& d) {
  std::string out(1, d.dep == Dep::u ? 'u' : 'v');
  if (d.order() == 0) return out;
  out += '_';
  out.append(d.t, 't');
  out.append(d.x, 'x');
  return out;
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, p] : factors) d += p;
  return d;
}

int Monomial::max_order() const {
  int d = 0;
  for (const auto& [v, p] : factors) d = std::max(d, v.order());
  return d;
}

unsigned Monomial::power_of(const DerivIndex& d) const {
  for (const auto& [v, p] : factors) {
    if (v == d) return p;
  }
  return 0;
}

bool Monomial::contains(Dep dep) const {
  return std::any_of(factors.begin(), factors.end(), [&](const auto& f) { return f.first.dep == dep; });
}

Monomial Monomial::times(const DerivIndex& d, unsigned k) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.factors.begin(), out.factors.end(), d,
                             [](const auto& f, const DerivIndex& key) { return f.first < key; });
  if (it != out.factors.end() && it->first == d) {
    it->second = static_cast<std::uint8_t>(it->second + k);
  } else {
    out.factors.insert(it, {d, static_cast<std::uint8_t>(k)});
  }
  return out;
}

Monomial Monomial::without(const DerivIndex& d) const {
  Monomial out = *this;
  for (auto it = out.factors.begin(); it != out.factors.end(); ++it) {
    if (it->first != d) continue;
    if (--it->second == 0) out.factors.erase(it);
    return out;
  }
  throw AlgebraError("monomial does not contain " + to_string(d));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [v, p] : b.factors) out = out.times(v, p);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.factors[i].first <=> b.factors[i].first; c != 0) return c;
    if (auto c = a.factors[i].second <=> b.factors[i].second; c != 0) return c;
  }
  return a.factors.size() <=> b.factors.size();
}

// ---------------------------------------------------------------- JetExpr

JetExpr::JetExpr(const UCoeff& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

JetExpr JetExpr::var(const DerivIndex& d, const JetLimits& limits) {
  if (d.order() > limits.max_order) throw OrderOverflowError(d.order(), limits.max_order);
  if (d.dep == Dep::u && d.order() == 0) return JetExpr(UCoeff::u());
  return term(Monomial{}.times(d), 1);
}

JetExpr JetExpr::term(const Monomial& m, const UCoeff& c) {
  JetExpr out;
  out.add(m, c);
  return out;
}

void JetExpr::add(const Monomial& m, const UCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int JetExpr::max_order() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.max_order());
  return d;
}

bool JetExpr::contains(Dep dep) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.contains(dep); });
}

UCoeff JetExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? UCoeff() : it->second;
}

JetExpr JetExpr::operator-() const {
  JetExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

JetExpr& JetExpr::operator+=(const JetExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

JetExpr& JetExpr::operator-=(const JetExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

JetExpr operator*(const JetExpr& a, const JetExpr& b) {
  JetExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  }
  return out;
}

JetExpr JetExpr::scaled(const UCoeff& s) const {
  JetExpr out;
  for (const auto& [m, c] : terms_) out.add(m, c * s);
  return out;
}

JetExpr JetExpr::pow(unsigned k) const {
  JetExpr out(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

JetExpr JetExpr::partial(const DerivIndex& d) const {
  JetExpr out;
  if (d.dep == Dep::u && d.order() == 0) {
    for (const auto& [m, c] : terms_) out.add(m, c.du());
    return out;
  }
  for (const auto& [m, c] : terms_) {
    const unsigned p = m.power_of(d);
    if (p == 0) continue;
    out.add(m.without(d), c.scaled(ParamExpr(static_cast<long>(p))));
  }
  return out;
}

JetExpr JetExpr::substitute(const ParamBinding& binding) const {
  return map_coefficients([&](const UCoeff& c) { return c.substitute(binding); });
}

JetExpr JetExpr::instantiate(Formal symbol, const UCoeff& value) const {
  return map_coefficients([&](const UCoeff& c) { return c.instantiate(symbol, value); });
}

// ---------------------------------------------------------------- raw trees

RawExpr RawExpr::make_scalar(const ParamExpr& p, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::scalar;
  e.scalar = p;
  e.span = s;
  return e;
}

RawExpr RawExpr::make_var(const DerivIndex& d, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::var;
  e.var = d;
  e.span = s;
  return e;
}

RawExpr RawExpr::make_atom(const UCoeff& c, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::atom;
  e.atom = c;
  e.span = s;
  return e;
}

RawExpr RawExpr::make_sum(std::vector<RawExpr> items, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::sum;
  e.children = std::move(items);
  e.span = s;
  return e;
}

RawExpr RawExpr::make_product(std::vector<RawExpr> items, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::product;
  e.children = std::move(items);
  e.span = s;
  return e;
}

RawExpr RawExpr::make_power(RawExpr base, const ParamExpr& exponent, SourceSpan s) {
  RawExpr e;
  e.kind = Kind::power;
  e.children.push_back(std::move(base));
  e.scalar = exponent;
  e.span = s;
  return e;
}

namespace {

std::optional<long> small_integer(const ParamExpr& p) {
  auto r = p.as_rational();
  if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
  return r->get_num().get_si();
}

JetExpr normalize_power(const JetExpr& base, const ParamExpr& exponent, const SourceSpan& span) {
  const auto k = small_integer(exponent);
  if (k && *k >= 0) {
    if (*k > 64) throw ParseError("exponent too large", span);
    return base.pow(static_cast<unsigned>(*k));
  }
  if (base.is_zero()) throw ParseError("zero raised to a non-positive power", span);
  if (base.terms().size() != 1 || !base.terms().begin()->first.factors.empty()) {
    throw ParseError("only a single power-law term may carry this exponent", span);
  }
  const UCoeff& c = base.terms().begin()->second;
  if (c.terms().size() != 1) throw ParseError("only a single power-law term may carry this exponent", span);
  const auto& [key, coeff] = *c.terms().begin();
  if (!key.formal.empty() || key.log_power != 0 || key.t_power != 0 || key.x_power != 0) {
    throw ParseError("only powers of u and of parameters may carry this exponent", span);
  }
  if (k) {
    return JetExpr(UCoeff::power(key.exponent.scaled(*k), coeff.pow(static_cast<int>(*k))));
  }
  if (coeff != ParamExpr(1)) throw ParseError("non-integer exponent on a parameter", span);
  auto e = AffineExp::from_param(key.exponent.as_param() * exponent);
  if (!e) throw ParseError("exponent of u is not affine in b", span);
  return JetExpr(UCoeff::power(*e));
}

}  // namespace

JetExpr normalize(const RawExpr& e, const JetLimits& limits) {
  switch (e.kind) {
    case RawExpr::Kind::scalar:
      return JetExpr(e.scalar);
    case RawExpr::Kind::atom:
      return JetExpr(e.atom);
    case RawExpr::Kind::var:
      return JetExpr::var(e.var, limits);
    case RawExpr::Kind::sum: {
      JetExpr out;
      for (const auto& c : e.children) out += normalize(c, limits);
      return out;
    }
    case RawExpr::Kind::product: {
      JetExpr out(1);
      for (const auto& c : e.children) out = out * normalize(c, limits);
      return out;
    }
    case RawExpr::Kind::power:
      return normalize_power(normalize(e.children.at(0), limits), e.scalar, e.span);
  }
  return JetExpr();
}

// ---------------------------------------------------------------- calculus

JetExpr total_derivative(const JetExpr& e, Axis axis, const JetLimits& limits) {
  const JetExpr ux = JetExpr::var(du(axis == Axis::t ? 1 : 0, axis == Axis::x ? 1 : 0), limits);
  JetExpr out;
  for (const auto& [m, c] : e.terms()) {
    const JetExpr mono = JetExpr::term(m, 1);
    const UCoeff explicit_part = axis == Axis::t ? c.dt_explicit() : c.dx_explicit();
    out += (ux.scaled(c.du()) + JetExpr(explicit_part)) * mono;
    for (const auto& [d, p] : m.factors) {
      const DerivIndex next = d.shifted(axis);
      out += JetExpr::term(m.without(d), c.scaled(ParamExpr(static_cast<long>(p)))) * JetExpr::var(next, limits);
    }
  }
  return out;
}

JetExpr variational_derivative(const JetExpr& e, Dep w, const JetLimits& limits) {
  std::vector<DerivIndex> coords;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [d, p] : m.factors) {
      if (d.dep == w && std::find(coords.begin(), coords.end(), d) == coords.end()) coords.push_back(d);
    }
  }
  JetExpr out;
  if (w == Dep::u) out += e.partial(du(0, 0));
  for (const DerivIndex& d : coords) {
    JetExpr piece = e.partial(d);
    for (int i = 0; i < d.t; ++i) piece = total_derivative(piece, Axis::t, limits);
    for (int i = 0; i < d.x; ++i) piece = total_derivative(piece, Axis::x, limits);
    if (d.order() % 2 == 1) out -= piece;
    else out += piece;
  }
  return out;
}

JetExpr substitute_dependent(const JetExpr& e) {
  JetExpr out;
  JetLimits unbounded{1 << 20};
  for (const auto& [m, c] : e.terms()) {
    JetExpr term(c);
    for (const auto& [d, p] : m.factors) {
      DerivIndex target = d;
      target.dep = Dep::u;
      term = term * JetExpr::var(target, unbounded).pow(p);
    }
    out += term;
  }
  return out;
}

bool is_obstruction(const UCoeff& c) {
  if (c.is_zero() || c.has_formal()) return false;
  for (const auto& [key, coeff] : c.terms()) {
    if (!coeff.is_constant() || key.exponent.n != 0) return false;
  }
  return true;
}

std::optional<MatchResult> match_pivot(const JetExpr& a, const JetExpr& b) {
  if (b.is_zero()) throw DegenerateMatchError("cannot match against the zero expression");
  std::vector<Monomial> candidates;
  const Monomial ut = Monomial{}.times(du(1, 0));
  auto usable = [&](const Monomial& m) {
    const UCoeff cb = b.coefficient(m);
    return cb.is_constant() && a.coefficient(m).is_constant();
  };
  if (usable(ut) && b.coefficient(ut).as_param()->is_constant()) candidates.push_back(ut);
  for (const auto& [m, c] : b.terms()) {
    if (usable(m) && c.as_param()->is_constant()) candidates.push_back(m);
  }
  for (const auto& [m, c] : b.terms()) {
    if (usable(m)) candidates.push_back(m);
  }
  if (candidates.empty()) return std::nullopt;

  MatchResult result;
  result.pivot = candidates.front();
  result.lambda = *a.coefficient(result.pivot).as_param() / *b.coefficient(result.pivot).as_param();
  const JetExpr residual = a - b.scaled(UCoeff(result.lambda));
  for (const auto& [m, c] : residual.terms()) {
    result.conditions.push_back({m, c});
    if (is_obstruction(c)) result.consistent = false;
  }
  return result;
}

std::optional<MatchResult> match_multiple(const JetExpr& a, const JetExpr& b) {
  auto r = match_pivot(a, b);
  if (!r || !r->consistent) return std::nullopt;
  return r;
}

}  // namespace sal
