#include "sal/equation.hpp"

#include <map>
#include <sstream>

#include "sal/format.hpp"
#include "sal/parser.hpp"

namespace sal {

JetExpr equation_expr(const EquationSpec& spec) {
  const JetExpr ux = JetExpr::var(du(0, 1));
  return JetExpr::var(du(1, 0)) + JetExpr::var(du(1, 2)).scaled(UCoeff(spec.epsilon)) + ux.scaled(spec.f) +
         (ux * JetExpr::var(du(0, 2))).scaled(spec.g) + JetExpr::var(du(0, 3)).scaled(spec.h);
}

UCoeff u_power(const ParamExpr& e, const ParamExpr& coefficient) {
  auto a = AffineExp::from_param(e);
  if (!a) throw AlgebraError("exponent " + to_string(e) + " is not affine in b");
  return UCoeff::power(*a, coefficient);
}

EquationSpec formal_spec() {
  EquationSpec s;
  s.name = "formal";
  s.epsilon = ParamExpr::param(Param::eps);
  s.f = UCoeff::formal(Formal::f);
  s.g = UCoeff::formal(Formal::g);
  s.h = UCoeff::formal(Formal::h);
  return s;
}

EquationSpec power_law_spec(const ParamExpr& eps, const ParamExpr& b, const ParamExpr& gamma,
                            const ParamExpr& sigma, const ParamExpr& delta) {
  EquationSpec s;
  s.name = "power-law";
  s.epsilon = eps;
  s.f = u_power(b, gamma);
  s.g = u_power(b - 1, sigma);
  s.h = u_power(b, delta);
  s.power_law = PowerLaw{b, gamma, sigma, delta, std::nullopt, std::nullopt};
  return s;
}

EquationSpec family_spec(const ParamExpr& eps, const ParamExpr& b, const ParamExpr& gamma,
                         const ParamExpr& beta, const ParamExpr& c) {
  EquationSpec s = power_law_spec(eps, b, gamma, -(b + 1) * beta, c - beta);
  s.name = "family";
  s.power_law->beta = beta;
  s.power_law->c = c;
  return s;
}

EquationSpec camassa_holm() {
  EquationSpec s = family_spec(-1, 1, 3, 1);
  s.name = "camassa-holm";
  return s;
}

EquationSpec novikov() {
  EquationSpec s = family_spec(-1, 2, 4, 1);
  s.name = "novikov";
  return s;
}

EquationSpec bbm() {
  EquationSpec s = family_spec(-1, 1, -1, 0);
  s.name = "bbm";
  return s;
}

EquationSpec riemann(const ParamExpr& b, const ParamExpr& gamma) {
  EquationSpec s = family_spec(0, b, gamma, 0);
  s.name = "riemann";
  return s;
}

EquationSpec b_equation(const ParamExpr& B) {
  EquationSpec s;
  s.name = "b-equation";
  s.epsilon = -1;
  s.f = UCoeff::u().scaled(B + 1);
  s.g = UCoeff(-B);
  s.h = -UCoeff::u();
  if (B.is_constant()) {
    s.power_law = PowerLaw{1, B + 1, -B, -1, std::nullopt, std::nullopt};
  }
  return s;
}

// ---------------------------------------------------------------- spec files

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

struct Entry {
  std::string value;
  int line;
};

ParamExpr param_value(const Entry& e, const std::string& key) {
  try {
    return parse_param(e.value);
  } catch (const ParseError& err) {
    throw ParseError(key + ": " + err.what(), SourceSpan{0, 0, e.line, 1});
  }
}

UCoeff coeff_value(const Entry& e, const std::string& key) {
  try {
    return parse_expr(e.value);
  } catch (const ParseError& err) {
    throw ParseError(key + ": " + err.what(), SourceSpan{0, 0, e.line, 1});
  }
}

}  // namespace

EquationSpec parse_spec(std::string_view text) {
  static const std::map<std::string, std::string> kAliases = {
      {"eps", "epsilon"}, {"epsilon", "epsilon"}, {"name", "name"}, {"f", "f"},         {"g", "g"},
      {"h", "h"},         {"b", "b"},             {"gamma", "gamma"}, {"beta", "beta"}, {"sigma", "sigma"},
      {"delta", "delta"}, {"c", "c"}};
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto colon = stripped.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", SourceSpan{0, 0, line_no, 1});
    }
    const std::string key = trim(std::string_view(stripped).substr(0, colon));
    auto alias = kAliases.find(key);
    if (alias == kAliases.end()) throw ParseError("unknown key '" + key + "'", SourceSpan{0, 0, line_no, 1});
    if (entries.count(alias->second)) {
      throw ParseError("duplicate key '" + key + "'", SourceSpan{0, 0, line_no, 1});
    }
    entries[alias->second] = {unquote(trim(std::string_view(stripped).substr(colon + 1))), line_no};
  }

  auto has = [&](const char* k) { return entries.count(k) > 0; };
  if (!has("epsilon")) throw ParseError("missing key 'epsilon'", SourceSpan{0, 0, line_no, 1});
  const ParamExpr eps = param_value(entries["epsilon"], "epsilon");

  const bool power = has("b") || has("gamma") || has("beta") || has("sigma") || has("delta");
  EquationSpec spec;
  if (power) {
    if (!has("b") || !has("gamma")) {
      throw ParseError("power-law form needs both 'b' and 'gamma'", SourceSpan{0, 0, line_no, 1});
    }
    const ParamExpr b = param_value(entries["b"], "b");
    const ParamExpr gamma = param_value(entries["gamma"], "gamma");
    if (has("beta")) {
      if (has("sigma") || has("delta")) {
        throw ParseError("give either 'beta' or 'sigma'/'delta', not both", SourceSpan{0, 0, line_no, 1});
      }
      const ParamExpr c = has("c") ? param_value(entries["c"], "c") : ParamExpr(0);
      spec = family_spec(eps, b, gamma, param_value(entries["beta"], "beta"), c);
    } else {
      if (!has("sigma") || !has("delta")) {
        throw ParseError("power-law form needs 'beta' or both 'sigma' and 'delta'", SourceSpan{0, 0, line_no, 1});
      }
      if (has("c")) throw ParseError("'c' requires the 'beta' form", SourceSpan{0, 0, entries["c"].line, 1});
      spec = power_law_spec(eps, b, gamma, param_value(entries["sigma"], "sigma"),
                            param_value(entries["delta"], "delta"));
    }
    for (const char* k : {"f", "g", "h"}) {
      if (!has(k)) continue;
      const UCoeff explicit_value = coeff_value(entries[k], k);
      const UCoeff& implied = k[0] == 'f' ? spec.f : (k[0] == 'g' ? spec.g : spec.h);
      if (explicit_value != implied) {
        throw UnsupportedSpecError(std::string("inconsistent specification: ") + k + " = " +
                                   to_string(explicit_value) + " but the power-law keys give " +
                                   to_string(implied));
      }
    }
  } else {
    for (const char* k : {"f", "g", "h"}) {
      if (!has(k)) throw ParseError(std::string("missing key '") + k + "'", SourceSpan{0, 0, line_no, 1});
    }
    if (has("c")) throw ParseError("'c' requires the power-law form", SourceSpan{0, 0, entries["c"].line, 1});
    spec.epsilon = eps;
    spec.f = coeff_value(entries["f"], "f");
    spec.g = coeff_value(entries["g"], "g");
    spec.h = coeff_value(entries["h"], "h");
  }
  spec.name = has("name") ? entries["name"].value : "spec";
  return spec;
}

std::string to_spec_text(const EquationSpec& spec) {
  std::ostringstream out;
  out << "name: " << spec.name << "\n";
  out << "epsilon: " << to_string(spec.epsilon) << "\n";
  if (spec.power_law) {
    const PowerLaw& p = *spec.power_law;
    out << "b: " << to_string(p.b) << "\n";
    out << "gamma: " << to_string(p.gamma) << "\n";
    if (p.beta) {
      out << "beta: " << to_string(*p.beta) << "\n";
      out << "c: " << to_string(p.c.value_or(ParamExpr(0))) << "\n";
    } else {
      out << "sigma: " << to_string(p.sigma) << "\n";
      out << "delta: " << to_string(p.delta) << "\n";
    }
  }
  out << "f: " << to_string(spec.f) << "\n";
  out << "g: " << to_string(spec.g) << "\n";
  out << "h: " << to_string(spec.h) << "\n";
  return out.str();
}

}  // namespace sal
