#pragma once

#include <string_view>

#include "galois/poly.hpp"

namespace galois {

/// Grammar accepted by parse_poly (whitespace ignored):
///
///   expr  := term (("+"|"-") term)*
///   term  := coeff | coeff "*"? var | var
///   var   := "x" ("^" nat)?
///   coeff := int | int "/" posint
///
/// A term may start with a unary minus. Like terms are combined.
inline constexpr std::string_view kPolyGrammar =
    "expr  := term ((\"+\"|\"-\") term)*\n"
    "term  := coeff | coeff \"*\"? var | var\n"
    "var   := \"x\" (\"^\" nat)?\n"
    "coeff := int | int \"/\" posint\n"
    "(whitespace ignored; unary minus allowed at term start; only the variable x)";

/// Throws SyntaxError, Error{UnknownVariable} or Error{ZeroPolynomial}.
RationalPoly parse_poly(std::string_view text);

}  // namespace galois
