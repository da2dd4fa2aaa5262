#pragma once

#include <cstddef>
#include <vector>

#include "cremona/projmap.hpp"
#include "cremona/ratfunc.hpp"

namespace cremona {

// Restriction of a map to the chart x0 = 1: g_i = f_i(1, x) / f_0(1, x), i = 1..n.
// Components live in the ring x0..xn and never involve x0.
struct AffMap {
  std::size_t n = 0;
  std::vector<RatFunc> components;
};

AffMap to_affine(const ProjMap& f);
ProjMap from_affine(const AffMap& g);

// [f_0 : ... : f_n] for homogeneous fractions of one common degree, denominators cleared.
ProjMap from_fractions(const std::vector<RatFunc>& comps);
// Reduced determinant of the n x n matrix of partial derivatives dg_i/dx_j, j = 1..n.
RatFunc affine_jacobian(const AffMap& g);
// Determinant of d fs[i] / d x_{vars[j]} by the quotient rule.
RatFunc rational_jacobian(const std::vector<RatFunc>& fs, const std::vector<std::size_t>& vars);

// The map of P^{n+1} acting as f on the first n affine coordinates and fixing the last.
ProjMap linear_embed(const ProjMap& f);

}  // namespace cremona
