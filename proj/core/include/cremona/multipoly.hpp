#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector with cached total degree. Ordered graded-lexicographically
// with x0 > x1 > ... so that the largest monomial comes first in a polynomial.
class Exponents {
 public:
  Exponents() = default;

  static Exponents unit(std::size_t var, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t value);
  std::uint32_t degree() const { return deg_; }

  Exponents operator+(const Exponents& o) const;
  // Requires o.divides(*this).
  Exponents operator-(const Exponents& o) const;
  bool divides(const Exponents& o) const;
  static Exponents min(const Exponents& a, const Exponents& b);
  static Exponents max(const Exponents& a, const Exponents& b);

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    return a.e_ <=> b.e_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept { return e.hash(); }
};

struct Term {
  Exponents exp;
  Coeff coeff;
};

// Sparse polynomial in x0..x_{n-1} over a Field. Terms are stored without
// zero coefficients, sorted from the graded-lex largest monomial down.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(Field f, std::size_t num_vars);

  static MultiPoly constant(Field f, std::size_t num_vars, const Coeff& c);
  static MultiPoly constant(Field f, std::size_t num_vars, long c);
  static MultiPoly variable(Field f, std::size_t num_vars, std::size_t var);
  static MultiPoly monomial(Field f, std::size_t num_vars, const Exponents& e, const Coeff& c);
  // Sorts and merges; zero coefficients are dropped.
  static MultiPoly from_terms(Field f, std::size_t num_vars, std::vector<Term> terms);

  Field field() const { return field_; }
  std::size_t num_vars() const { return nv_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.degree() == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }
  // -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_[0].exp.degree()); }
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  bool is_homogeneous() const;

  const Term& leading_term() const { return terms_.front(); }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }
  // Coefficient of the constant monomial (zero when absent).
  Coeff constant_coeff() const;
  // Componentwise minimum of all exponent vectors.
  Exponents monomial_content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Coeff& c) const;
  MultiPoly shifted(const Exponents& e) const;
  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var) const;

  // Replaces x_i by values[i]; all values share one ring, which becomes the result's ring.
  MultiPoly substitute(std::span<const MultiPoly> values) const;
  // Sets x_var to the constant c, keeping the variable count.
  MultiPoly evaluate_at(std::size_t var, const Coeff& c) const;
  // Multiplies each term by x_var^(degree - deg term).
  MultiPoly homogenize(std::size_t var, std::uint32_t degree) const;
  // Same polynomial viewed in a ring with num_vars variables (unused tail variables only).
  MultiPoly with_num_vars(std::size_t num_vars) const;
  // Variable i becomes variable target[i] in a ring of num_vars variables.
  MultiPoly rename(std::span<const std::size_t> target, std::size_t num_vars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_ring(const MultiPoly& o) const;
  void add_scaled(const MultiPoly& o, bool negate);

  Field field_;
  std::size_t nv_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a/b, or nullopt when b does not divide a. Throws on b == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Coefficients of p as a polynomial in x_var: result[k] multiplies x_var^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);

}  // namespace cremona
