#pragma once

#include <random>

#include "cremona/polytext.hpp"
#include "cremona/projmap.hpp"

namespace cremona::test {

inline const Field Q = Field::rationals();

inline MultiPoly P(const char* text, std::size_t nv, Field f = Q) { return parse_poly(text, f, nv); }
inline ProjMap M(const char* text, Field f = Q) { return parse_map(text, f); }

inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t nv, unsigned max_deg, int terms, Field f = Q) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, static_cast<int>(max_deg));
  std::uniform_int_distribution<std::size_t> var(0, nv - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Exponents e;
    for (int k = deg(rng); k > 0; --k) e = e + Exponents::unit(var(rng));
    out.push_back({e, Coeff(f, static_cast<long>(coef(rng)))});
  }
  return MultiPoly::from_terms(f, nv, std::move(out));
}

}  // namespace cremona::test
