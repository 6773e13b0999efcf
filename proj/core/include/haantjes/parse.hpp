#pragma once

#include <string>

#include "haantjes/chart.hpp"
#include "haantjes/rational_fn.hpp"

namespace haantjes {

/// Parses expression text over the chart's variables.
///
/// Grammar (frozen; every file format embeds it):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' integer)?
///   base   := number | ident | '(' expr ')' | '-' base
///   number := integer ('/' positive-integer)?
///
/// A fraction literal is lexical (no spaces), and binds tighter than '^':
/// 6/2^2 reads as (6/2)^2 = 9, while 6 / 2^2 reads as 6/(2^2). Unary minus
/// binds before '^': -u1^2 is (-u1)^2. Negative exponents fold into the
/// quotient; 0^0 is 1 and 0^-k is a zero-division error.
RationalFn parse_expr(const std::string& text, const Chart& chart);

/// Canonical rendering: descending graded-lex term order; a leading negative
/// term always spells its coefficient (so it survives re-parsing), later
/// terms join with " + " / " - ". parse_expr is an exact inverse.
std::string print_polynomial(const Polynomial& p, const Chart& chart);

/// "(num)/(den)" for proper quotients, bare polynomial text otherwise.
std::string print_rational(const RationalFn& f);

}  // namespace haantjes
