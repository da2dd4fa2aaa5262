#pragma once

#include <optional>
#include <string>

#include "cremona/projmap.hpp"
#include "cremona/squarefree.hpp"

namespace cremona {

enum class Verdict { Obstructed, NoObstruction, Inapplicable };

std::string to_string(Verdict v);

struct ObstructionReport {
  Verdict verdict = Verdict::Inapplicable;
  std::optional<MultiPoly> witness_factor;
  std::optional<unsigned> witness_multiplicity;
  MultiPoly jacobian;
  // Absent when the Jacobian could not be decomposed (characteristic p, zero Jacobian).
  std::optional<SqfDecomp> decomposition;
  std::string reason;
};

struct PowerTest {
  bool holds = false;
  // f = unit * root^k when the test holds.
  std::optional<MultiPoly> root;
  // First factor whose multiplicity is not divisible by k.
  std::optional<SqfFactor> witness;
  // Absent when k = 2 and an exact square root settled the test.
  std::optional<SqfDecomp> decomposition;
};

// Is f a scalar times a k-th power? Characteristic 0 only.
PowerTest kth_power_test(const MultiPoly& f, unsigned k);

// Odd n: Obstructed iff Jac(f) has a squarefree factor of odd multiplicity, which
// proves f is not generated by the standard involution and linear maps.
// NoObstruction proves nothing. Even n or characteristic p: Inapplicable.
ObstructionReport gn_obstruction(const ProjMap& f);

// Multiplicity of h in Jac(f); characteristic 0, h nonconstant homogeneous.
unsigned discrepancy(const ProjMap& f, const MultiPoly& h);

// Squarefree decomposition of Jac(f).
SqfDecomp contracted_report(const ProjMap& f);

}  // namespace cremona
