#pragma once

#include <cstddef>

#include "cremona/multipoly.hpp"

namespace cremona {

// Scalar c such that p / c is the canonical representative of p up to units:
// over the rationals an integer polynomial with content 1 and positive leading
// coefficient, over F_p a monic polynomial. Returns 1 for the zero polynomial.
Coeff normalizing_scalar(const MultiPoly& p);
MultiPoly normalized(const MultiPoly& p);

// Normalized greatest common divisor; gcd(0, b) = normalized(b).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

// Normalized gcd of the coefficients of p viewed as a polynomial in x_var.
MultiPoly content_in(const MultiPoly& p, std::size_t var);

// Largest m with h^m | f. Throws std::invalid_argument for constant h or zero f.
unsigned multiplicity(const MultiPoly& h, const MultiPoly& f);

}  // namespace cremona
