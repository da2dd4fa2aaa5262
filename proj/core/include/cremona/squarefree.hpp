#pragma once

#include <optional>
#include <vector>

#include "cremona/multipoly.hpp"

namespace cremona {

struct SqfFactor {
  MultiPoly poly;
  unsigned multiplicity = 0;
};

// f = unit * prod(factor.poly ^ factor.multiplicity). Factors are normalized,
// squarefree, pairwise coprime, with distinct multiplicities in increasing order.
struct SqfDecomp {
  Coeff unit;
  std::vector<SqfFactor> factors;

  MultiPoly expand(Field f, std::size_t num_vars) const;
};

// Yun-style decomposition; characteristic 0 only (throws UnsupportedCharacteristic).
SqfDecomp squarefree_decompose(const MultiPoly& f);

// h with f = c * h^2 for a nonzero constant c, leading coefficient of h equal to 1.
// Needs characteristic other than 2.
std::optional<MultiPoly> square_root_up_to_scalar(const MultiPoly& f);

}  // namespace cremona
