#include "cremona/obstruction.hpp"

#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed:
      return "Obstructed";
    case Verdict::NoObstruction:
      return "NoObstruction";
    case Verdict::Inapplicable:
      return "Inapplicable";
  }
  return "?";
}

PowerTest kth_power_test(const MultiPoly& f, unsigned k) {
  if (k < 2) throw std::invalid_argument("power test needs k >= 2");
  if (!f.field().is_rational())
    throw UnsupportedCharacteristic("power test needs characteristic 0, got " + f.field().name());
  PowerTest out;
  if (k == 2)
    if (auto h = square_root_up_to_scalar(f)) {
      out.holds = true;
      out.root = normalized(*h);
      return out;
    }
  out.decomposition = squarefree_decompose(f);
  MultiPoly root = MultiPoly::constant(f.field(), f.num_vars(), 1);
  for (const auto& fac : out.decomposition->factors) {
    if (fac.multiplicity % k != 0) {
      if (!out.witness) out.witness = fac;
      continue;
    }
    root *= fac.poly.pow(fac.multiplicity / k);
  }
  out.holds = !out.witness;
  if (out.holds) out.root = root;
  return out;
}

ObstructionReport gn_obstruction(const ProjMap& f) {
  ObstructionReport r;
  r.jacobian = jacobian(f);
  if (!f.field().is_rational()) {
    r.reason = "characteristic " + std::to_string(f.field().characteristic()) + " is not supported";
    return r;
  }
  if (r.jacobian.is_zero()) {
    r.reason = "zero Jacobian";
    return r;
  }
  if (f.dim() % 2 == 0) {
    r.decomposition = squarefree_decompose(r.jacobian);
    r.reason = "even dimension: every Jacobian multiplicity test is inconclusive";
    return r;
  }
  if (square_root_up_to_scalar(r.jacobian)) {
    r.verdict = Verdict::NoObstruction;
    r.reason = "Jacobian is a scalar times a square";
    return r;
  }
  r.decomposition = squarefree_decompose(r.jacobian);
  for (const auto& fac : r.decomposition->factors)
    if (fac.multiplicity % 2 == 1) {
      r.verdict = Verdict::Obstructed;
      r.witness_factor = fac.poly;
      r.witness_multiplicity = fac.multiplicity;
      r.reason = "Jacobian has a factor of odd multiplicity";
      return r;
    }
  throw std::logic_error("non-square Jacobian without a factor of odd multiplicity");
}

unsigned discrepancy(const ProjMap& f, const MultiPoly& h) {
  if (!f.field().is_rational())
    throw UnsupportedCharacteristic("discrepancy needs characteristic 0");
  if (h.is_constant()) throw std::invalid_argument("discrepancy of a constant polynomial");
  if (!h.is_homogeneous()) throw std::invalid_argument("discrepancy needs a homogeneous polynomial");
  return multiplicity(h, jacobian(f));
}

SqfDecomp contracted_report(const ProjMap& f) { return squarefree_decompose(jacobian(f)); }

}  // namespace cremona
