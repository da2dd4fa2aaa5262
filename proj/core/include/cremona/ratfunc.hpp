#pragma once

#include <string>

#include "cremona/multipoly.hpp"

namespace cremona {

// Reduced fraction num/den with den normalized (see normalized()).
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const MultiPoly& num, const MultiPoly& den);
  static RatFunc from_poly(const MultiPoly& p);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc derivative(std::size_t var) const;
  RatFunc with_num_vars(std::size_t num_vars) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string format_ratfunc(const RatFunc& r);

}  // namespace cremona
