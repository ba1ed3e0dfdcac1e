#include "sal/parser.hpp"

#include <cctype>
#include <string>

namespace sal {

namespace {

enum class Tok { number, ident, prime, caret, star, plus, minus, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t start;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::end, {}, start};
    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::number, src_.substr(start, pos_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::ident, src_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (ch) {
      case '\'': return {Tok::prime, src_.substr(start, 1), start};
      case '^': return {Tok::caret, src_.substr(start, 1), start};
      case '*': return {Tok::star, src_.substr(start, 1), start};
      case '+': return {Tok::plus, src_.substr(start, 1), start};
      case '-': return {Tok::minus, src_.substr(start, 1), start};
      case '/': return {Tok::slash, src_.substr(start, 1), start};
      case '(': return {Tok::lparen, src_.substr(start, 1), start};
      case ')': return {Tok::rparen, src_.substr(start, 1), start};
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", span_of(start, pos_));
  }

  SourceSpan span_of(std::size_t start, std::size_t end) const {
    SourceSpan s{start, end, 1, 1};
    for (std::size_t i = 0; i < start && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

 private:
  std::string_view src_;
  std::size_t pos_{0};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), lex_(src) { advance(); }

  RawExpr parse_all() {
    RawExpr e = expr();
    if (tok_.kind != Tok::end) fail("unexpected trailing input");
    return e;
  }

 private:
  void advance() {
    prev_end_ = tok_.start + tok_.text.size();
    tok_ = lex_.next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t end = tok_.kind == Tok::end ? src_.size() : tok_.start + tok_.text.size();
    throw ParseError(msg, lex_.span_of(std::min(tok_.start, src_.size()), end));
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(std::string("expected ") + what);
    advance();
  }

  SourceSpan span_from(std::size_t start) const { return lex_.span_of(start, prev_end_); }

  RawExpr expr() {
    const std::size_t start = tok_.start;
    std::vector<RawExpr> items;
    bool negate = false;
    if (tok_.kind == Tok::minus || tok_.kind == Tok::plus) {
      negate = tok_.kind == Tok::minus;
      advance();
    }
    items.push_back(signed_term(negate));
    while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
      negate = tok_.kind == Tok::minus;
      advance();
      items.push_back(signed_term(negate));
    }
    if (items.size() == 1) return std::move(items.front());
    return RawExpr::make_sum(std::move(items), span_from(start));
  }

  RawExpr signed_term(bool negate) {
    RawExpr t = term();
    if (!negate) return t;
    const SourceSpan s = t.span;
    return RawExpr::make_product({RawExpr::make_scalar(-1, s), std::move(t)}, s);
  }

  RawExpr term() {
    const std::size_t start = tok_.start;
    std::vector<RawExpr> items;
    items.push_back(factor());
    while (tok_.kind == Tok::star) {
      advance();
      items.push_back(factor());
    }
    if (items.size() == 1) return std::move(items.front());
    return RawExpr::make_product(std::move(items), span_from(start));
  }

  RawExpr factor() {
    const std::size_t start = tok_.start;
    RawExpr base = atom();
    if (tok_.kind != Tok::caret) return base;
    advance();
    const ParamExpr e = exponent();
    return RawExpr::make_power(std::move(base), e, span_from(start));
  }

  Rational rational_literal() {
    if (tok_.kind != Tok::number) fail("expected a number");
    Rational value(std::string(tok_.text), 10);
    advance();
    if (tok_.kind == Tok::slash) {
      advance();
      if (tok_.kind != Tok::number) fail("expected a denominator");
      Rational den(std::string(tok_.text), 10);
      if (den == 0) fail("zero denominator");
      advance();
      value /= den;
    }
    return value;
  }

  ParamExpr exponent() {
    if (tok_.kind == Tok::lparen) {
      const std::size_t start = tok_.start;
      advance();
      RawExpr inner = expr();
      expect(Tok::rparen, "')'");
      const JetExpr e = normalize(inner);
      if (!e.terms().empty() && (e.terms().size() != 1 || !e.terms().begin()->first.factors.empty() ||
                                 !e.terms().begin()->second.is_constant())) {
        throw ParseError("exponent must be a parameter expression", span_from(start));
      }
      return e.is_zero() ? ParamExpr() : *e.terms().begin()->second.as_param();
    }
    bool negate = false;
    if (tok_.kind == Tok::minus || tok_.kind == Tok::plus) {
      negate = tok_.kind == Tok::minus;
      advance();
    }
    if (tok_.kind == Tok::ident) {
      auto p = param_from_name(tok_.text);
      if (!p) fail("expected an exponent");
      advance();
      const ParamExpr e = ParamExpr::param(*p);
      return negate ? -e : e;
    }
    const Rational r = rational_literal();
    return ParamExpr(negate ? Rational(-r) : r);
  }

  RawExpr atom() {
    const std::size_t start = tok_.start;
    switch (tok_.kind) {
      case Tok::number: {
        const Rational r = rational_literal();
        return RawExpr::make_scalar(ParamExpr(r), span_from(start));
      }
      case Tok::lparen: {
        advance();
        RawExpr e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::ident:
        return identifier();
      default:
        fail("expected an operand");
    }
  }

  RawExpr identifier() {
    const std::size_t start = tok_.start;
    const std::string_view name = tok_.text;
    advance();
    if (name == "u") return RawExpr::make_atom(UCoeff::u(), span_from(start));
    if (name == "v") return RawExpr::make_var(dv(0, 0), span_from(start));
    if (name == "t") return RawExpr::make_atom(UCoeff::t(), span_from(start));
    if (name == "x") return RawExpr::make_atom(UCoeff::x(), span_from(start));
    if (name == "ln") {
      expect(Tok::lparen, "'(' after ln");
      if (tok_.kind != Tok::ident || tok_.text != "u") fail("ln accepts only u");
      advance();
      expect(Tok::rparen, "')'");
      return RawExpr::make_atom(UCoeff::log_u(), span_from(start));
    }
    if (name == "f" || name == "g" || name == "h") {
      int order = 0;
      while (tok_.kind == Tok::prime) {
        ++order;
        advance();
      }
      if (tok_.kind == Tok::lparen) {
        advance();
        if (tok_.kind != Tok::ident || tok_.text != "u") fail("formal functions take only u");
        advance();
        expect(Tok::rparen, "')'");
      }
      const Formal sym = name == "f" ? Formal::f : (name == "g" ? Formal::g : Formal::h);
      return RawExpr::make_atom(UCoeff::formal(sym, order), span_from(start));
    }
    if (name.size() > 2 && (name[0] == 'u' || name[0] == 'v') && name[1] == '_') {
      int t = 0;
      int x = 0;
      for (char ch : name.substr(2)) {
        if (ch == 't') ++t;
        else if (ch == 'x') ++x;
        else throw ParseError("unknown jet variable '" + std::string(name) + "'", span_from(start));
      }
      if (t > 255 || x > 255) throw ParseError("jet variable order too large", span_from(start));
      const DerivIndex d = name[0] == 'u' ? du(t, x) : dv(t, x);
      return RawExpr::make_var(d, span_from(start));
    }
    if (auto p = param_from_name(name)) return RawExpr::make_scalar(ParamExpr::param(*p), span_from(start));
    throw ParseError("unknown identifier '" + std::string(name) + "'", span_from(start));
  }

  std::string_view src_;
  Lexer lex_;
  Token tok_{Tok::end, {}, 0};
  std::size_t prev_end_{0};
};

}  // namespace

RawExpr parse_raw(std::string_view text) { return Parser(text).parse_all(); }

JetExpr parse_jet(std::string_view text, const JetLimits& limits) {
  return normalize(parse_raw(text), limits);
}

UCoeff parse_expr(std::string_view text) {
  const JetExpr e = parse_jet(text);
  for (const auto& [m, c] : e.terms()) {
    if (!m.factors.empty()) {
      throw ParseError("jet variable " + to_string(m.factors.front().first) + " in a coefficient function",
                       SourceSpan{0, text.size(), 1, 1});
    }
  }
  return e.is_zero() ? UCoeff() : e.terms().begin()->second;
}

ParamExpr parse_param(std::string_view text) {
  const UCoeff c = parse_expr(text);
  auto p = c.as_param();
  if (!p) throw ParseError("expected a parameter expression", SourceSpan{0, text.size(), 1, 1});
  return *p;
}

}  // namespace sal
