#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cremona/multipoly.hpp"

namespace cremona {

// Grammar: poly := term (('+'|'-') term)* ; term := coeff? ('*'? var ('^' nat)?)* ;
// var := 'x' nat ; coeff := int | int '/' int. Whitespace is ignored.
// num_vars == 0 infers the count from the largest variable index.
MultiPoly parse_poly(std::string_view text, Field field, std::size_t num_vars = 0);

// Graded-lex descending, e.g. "x0^2-3/2*x0*x1+7".
std::string format_poly(const MultiPoly& p);

}  // namespace cremona
