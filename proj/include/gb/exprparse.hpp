#ifndef GB_EXPRPARSE_HPP
#define GB_EXPRPARSE_HPP

#include <string>
#include <utility>
#include <vector>

#include "gb/residue.hpp"

namespace gb {

/// Parses a rational-function expression in the variable x with integer
/// literals and + - * / ^ ( ); e.g. "(x^2 - 1)/(3*x)". Throws
/// std::invalid_argument on syntax errors or division by zero.
RationalFunction parse_rational_function(const std::string& text);

/// Parses a symbol slot "(u, v)" with u, v rational-function expressions.
std::pair<RationalFunction, RationalFunction> parse_symbol_pair(const std::string& text);

/// Parses a place: "inf" / "infinity" for the degree place, otherwise a
/// polynomial expression that must be monic irreducible.
GeometricPlace parse_place(const std::string& text);

}  // namespace gb

#endif
