#include "sal/format.hpp"

#include <vector>

namespace sal {

namespace {

struct Piece {
  Rational scalar;
  std::vector<std::string> factors;
};

std::string body(const Piece& p) {
  const Rational mag = abs(p.scalar);
  std::string out;
  if (p.factors.empty() || mag != 1) out = mag.get_str();
  for (const auto& f : p.factors) {
    if (!out.empty()) out += '*';
    out += f;
  }
  return out;
}

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const bool neg = sgn(pieces[i].scalar) < 0;
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += body(pieces[i]);
  }
  return out;
}

std::string power(const std::string& base, long k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

void param_factors(const Poly::Exponents& e, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (e[i] > 0) out.push_back(power(std::string(param_name(static_cast<Param>(i))), e[i]));
  }
}

std::vector<Piece> poly_pieces(const Poly& p) {
  std::vector<Piece> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Piece piece{it->second, {}};
    param_factors(it->first, piece.factors);
    out.push_back(std::move(piece));
  }
  return out;
}

/// Splits a parameter expression into a rational scalar and factors.
Piece param_piece(const ParamExpr& p) {
  Piece out{1, {}};
  const Poly& num = p.numerator();
  if (num.terms().size() == 1) {
    out.scalar = num.terms().begin()->second;
    param_factors(num.terms().begin()->first, out.factors);
  } else {
    out.factors.push_back("(" + to_string(num) + ")");
  }
  const Poly& den = p.denominator();
  if (!den.is_constant()) {
    if (den.terms().size() == 1) {
      const auto& e = den.terms().begin()->first;
      for (std::size_t i = 0; i < kParamCount; ++i) {
        if (e[i] > 0) out.factors.push_back(std::string(param_name(static_cast<Param>(i))) + "^-" + std::to_string(e[i]));
      }
    } else {
      out.factors.push_back("(" + to_string(den) + ")^-1");
    }
  } else {
    out.scalar /= den.constant_value();
  }
  return out;
}

std::string exponent_text(const AffineExp& e) {
  if (e.n == 0) {
    if (e.q.get_den() == 1 && e.q == 1) return "";
    return "^" + e.q.get_str();
  }
  if (e.n == 1 && e.q == 0) return "^b";
  return "^(" + to_string(e.as_param().numerator()) + ")";
}

void key_factors(const UTermKey& key, std::vector<std::string>& out) {
  if (!key.exponent.is_zero()) out.push_back("u" + exponent_text(key.exponent));
  if (key.log_power > 0) out.push_back(power("ln(u)", key.log_power));
  if (key.t_power > 0) out.push_back(power("t", key.t_power));
  if (key.x_power > 0) out.push_back(power("x", key.x_power));
  for (const auto& f : key.formal) {
    std::string name(1, formal_name(f.symbol));
    name.append(f.order, '\'');
    out.push_back(power(name, f.power));
  }
}

void monomial_factors(const Monomial& m, std::vector<std::string>& out) {
  for (const auto& [d, p] : m.factors) out.push_back(power(to_string(d), p));
}

}  // namespace

std::string to_string(const Poly& p) { return join(poly_pieces(p)); }

std::string to_string(const ParamExpr& p) {
  if (p.is_zero()) return "0";
  return join({param_piece(p)});
}

std::string to_string(const Monomial& m) {
  std::vector<std::string> f;
  monomial_factors(m, f);
  if (f.empty()) return "1";
  std::string out;
  for (const auto& s : f) out += (out.empty() ? "" : "*") + s;
  return out;
}

std::string to_string(const JetExpr& e) {
  std::vector<Piece> pieces;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [key, coeff] : c.terms()) {
      Piece piece = param_piece(coeff);
      key_factors(key, piece.factors);
      monomial_factors(m, piece.factors);
      pieces.push_back(std::move(piece));
    }
  }
  return join(pieces);
}

std::string to_string(const UCoeff& c) { return to_string(JetExpr(c)); }

}  // namespace sal
