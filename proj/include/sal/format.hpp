#pragma once

#include <string>

#include "sal/jet_expr.hpp"

namespace sal {

// Printers emit the input grammar, so parse_jet(to_string(e)) == e.

std::string to_string(const Poly& p);
std::string to_string(const ParamExpr& p);
std::string to_string(const UCoeff& c);
std::string to_string(const JetExpr& e);
std::string to_string(const Monomial& m);

}  // namespace sal
