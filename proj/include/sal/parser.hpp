#pragma once

#include <string_view>

#include "sal/jet_expr.hpp"

namespace sal {

/// Grammar (whitespace-insensitive):
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ['^' exponent]
///   atom     := rational | param | 'u' | 'ln(u)' | 't' | 'x'
///             | jet-var | formal | '(' expr ')'
///   exponent := signed-rational | 'b' | '(' expr ')'
/// rational is p or p/q; param is one of eps gamma sigma delta beta c b B
/// lambda; jet-var is u_<t..x..> or v, v_<t..x..>; formal is f, g or h
/// followed by primes and an optional "(u)".
RawExpr parse_raw(std::string_view text);

/// Full jet expression.
JetExpr parse_jet(std::string_view text, const JetLimits& limits = {});

/// Coefficient function of u only; jet variables are rejected.
UCoeff parse_expr(std::string_view text);

/// Parameter expression only.
ParamExpr parse_param(std::string_view text);

}  // namespace sal
