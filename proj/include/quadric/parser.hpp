#pragma once

#include <string_view>

#include "quadric/autom.hpp"

namespace quadric {

/// Grammar: sums and products of integers, x1..x4, i, parenthesized
/// expressions, `^` with natural exponents, unary minus and division by
/// nonzero constants, e.g. `(1/2)*x2 + i*x3 - x1^2`.
Polynomial parse_polynomial(std::string_view text);

/// Letters `E34(a=..,b=..,h=..)`, `E12(..)`, `E24(..)`, `E13(..)`,
/// `L[[a,b],[c,d]]`, `R[[a,b],[c,d]]`, `T`, joined by `*`. Missing a or b
/// default to 1. Throws ParseError or InvariantError.
TameWord parse_tame_word(std::string_view text);

/// Either a tame word or an explicit quadruple `(f1, f2, f3, f4)`.
Autom parse_autom(std::string_view text);

}  // namespace quadric
