#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/multipoly.hpp"

namespace cremona {

// Rational self-map of P^n given by n+1 homogeneous components of one degree
// d >= 1 without common factor, scaled canonically (integer content 1 and
// positive leading coefficient of the first nonzero component over the
// rationals; that coefficient equal to 1 over F_p).
class ProjMap {
 public:
  ProjMap() = default;
  // Cancels the common factor and normalizes. Throws std::invalid_argument on
  // inhomogeneous or degree-mismatched input, all-zero input, or a constant result.
  static ProjMap make(std::vector<MultiPoly> components);
  // As make(), for components the caller knows to have no common factor.
  static ProjMap make_coprime(std::vector<MultiPoly> components);
  static ProjMap identity(Field f, std::size_t n);
  // Component i is sum_j m[i][j] * x_j.
  static ProjMap linear(Field f, const std::vector<std::vector<Coeff>>& m);

  std::size_t dim() const { return comps_.empty() ? 0 : comps_.size() - 1; }
  Field field() const { return comps_.front().field(); }
  int degree() const { return degree_; }
  const std::vector<MultiPoly>& components() const { return comps_; }
  const MultiPoly& operator[](std::size_t i) const { return comps_[i]; }

  friend bool operator==(const ProjMap&, const ProjMap&) = default;

 private:
  std::vector<MultiPoly> comps_;
  int degree_ = 0;
};

struct Composition {
  ProjMap map;
  // formal_i = factor * map_i, where formal_i = f_i(g_0, ..., g_n).
  MultiPoly factor;
};

// f o g: substitutes the components of g into f, then cancels.
Composition compose_with_factor(const ProjMap& f, const ProjMap& g);
ProjMap compose(const ProjMap& f, const ProjMap& g);

// p(g_0, ..., g_n).
MultiPoly pullback(const MultiPoly& p, const ProjMap& g);

MultiPoly jacobian(const ProjMap& f);
// Determinant of the matrix of partial derivatives of arbitrary polynomials
// fs[i] with respect to vars[j].
MultiPoly jacobian_determinant(const std::vector<MultiPoly>& fs, const std::vector<std::size_t>& vars);
// Determinant of a square polynomial matrix.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

bool equal_up_to_scalar(const ProjMap& f, const ProjMap& g);
bool is_linear(const ProjMap& f);

// "[p0:p1:...:pn]" with the polynomial grammar; n + 1 variables.
ProjMap parse_map(std::string_view text, Field field);
std::string format_map(const ProjMap& f);

}  // namespace cremona
