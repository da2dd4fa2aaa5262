#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cremona/gnword.hpp"
#include "cremona/intmatrix.hpp"

namespace cremona {

// Generator words for the named maps of P^n over a field of characteristic
// other than 2. Every word is assembled from shared sub-words, so evaluating
// several of them with one WordEvaluator reuses the common pieces.
class GeneratorWords {
 public:
  GeneratorWords(std::size_t n, Field f);

  std::size_t dim() const { return n_; }
  Field field() const { return field_; }

  // Linear letter from a matrix over the integers.
  WordExpr linear(const std::vector<std::vector<long>>& m) const;
  struct Entry {
    std::size_t row, col;
    long value;
  };
  // Identity matrix with the given entries overwritten.
  WordExpr with_entries(std::initializer_list<Entry> entries) const;
  // Linear letter x_i -> x_i + c x_j.
  WordExpr shear(std::size_t i, std::size_t j, const Coeff& c) const;
  WordExpr diagonal(const std::vector<Coeff>& d) const;
  // R with R(x)_{rho(i)} = x_i.
  WordExpr relabel(const Permutation& rho) const;
  // R o w o R^{-1}.
  WordExpr conjugate(const Permutation& rho, const WordExpr& w) const;
  Permutation swap(std::size_t a, std::size_t b) const;

  const WordExpr& sigma() const { return sigma_; }
  const WordExpr& alpha1() const { return alpha1_; }
  const WordExpr& theta() const { return theta_; }
  // theta o alpha2 o theta = [x0 : x1 : x0^2/x1 - x2 : x3 : ...].
  const WordExpr& theta_alpha2() const;
  const WordExpr& tau_prime() const;
  // alpha o tau' o alpha^{-1} o tau'^{-1} with alpha: x2 -> x2 + x3.
  const WordExpr& commutator() const;
  const WordExpr& tau() const;
  const WordExpr& tau1() const;
  const WordExpr& tau2() const;
  const WordExpr& tau2_prime() const;
  // [x0 : x1 + x0 x3/x2 : x2 : ...].
  const WordExpr& tau3() const;
  // [x0 : x1 : x3 - x2 : x3 : ...].
  const WordExpr& alpha43() const;
  const WordExpr& chi0() const;
  const WordExpr& chi1() const;
  const WordExpr& chi() const;
  const WordExpr& phi1() const;
  const WordExpr& phi2() const;
  const WordExpr& phi3() const;
  const WordExpr& phi4() const;
  const WordExpr& phi5() const { return phi5_; }
  const WordExpr& mu() const;
  const WordExpr& mu_chi_phi4() const;
  const WordExpr& nu() const;
  // Multiplies x2 .. x_{2k-1} by x1/x0; needs 3 <= 2k-1 <= n.
  WordExpr psi(std::size_t k) const;
  // [x0 : x1 : x2 x1/x0 : x3 : ...]; only for even n.
  const WordExpr& xi() const;

 private:
  void require(bool ok, const char* what) const;

  std::size_t n_;
  Field field_;
  bool odd_char_;
  WordExpr sigma_, alpha1_, theta_, phi5_;
  WordExpr theta_alpha2_, tau_prime_, commutator_, tau_, tau1_, tau2_, tau2_prime_, tau3_, alpha43_;
  WordExpr chi0_, chi1_, chi_, phi1_, phi2_, phi3_, phi4_, mu_, mu_chi_phi4_, nu_, xi_;
};

}  // namespace cremona
