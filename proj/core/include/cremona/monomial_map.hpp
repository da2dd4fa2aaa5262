#pragma once

#include <optional>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/intmatrix.hpp"
#include "cremona/projmap.hpp"

namespace cremona {

// Affine coordinate i goes to coeffs[i] * prod_j x_j^matrix(i, j).
struct MonomialMap {
  std::vector<Coeff> coeffs;
  IntMatrix matrix;

  static MonomialMap identity(Field f, std::size_t n);
  // All coefficients 1.
  static MonomialMap from_matrix(Field f, const IntMatrix& m);

  std::size_t dim() const { return matrix.size(); }
  Field field() const { return coeffs.front().field(); }
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

// a o b.
MonomialMap monomial_compose(const MonomialMap& a, const MonomialMap& b);
MonomialMap monomial_inverse(const MonomialMap& m);

ProjMap to_projective(const MonomialMap& m);
// nullopt when some component is not a single term or the matrix is not unimodular.
std::optional<MonomialMap> from_projective(const ProjMap& f);

}  // namespace cremona
