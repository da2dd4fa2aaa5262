#include "cremona/ratfunc.hpp"

#include <stdexcept>

#include "cremona/gcd.hpp"
#include "cremona/polytext.hpp"

namespace cremona {

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = num;
    den_ = MultiPoly::constant(den.field(), den.num_vars(), 1);
    return;
  }
  MultiPoly g = gcd(num, den);
  MultiPoly n = g.is_one() ? num : *divide_exact(num, g);
  MultiPoly d = g.is_one() ? den : *divide_exact(den, g);
  Coeff s = normalizing_scalar(d);
  Coeff inv = s.inverse();
  num_ = n.scaled(inv);
  den_ = d.scaled(inv);
}

RatFunc RatFunc::from_poly(const MultiPoly& p) {
  RatFunc r;
  r.num_ = p;
  r.den_ = MultiPoly::constant(p.field(), p.num_vars(), 1);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative(std::size_t var) const {
  if (den_.is_one()) return from_poly(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::with_num_vars(std::size_t num_vars) const {
  RatFunc r;
  r.num_ = num_.with_num_vars(num_vars);
  r.den_ = den_.with_num_vars(num_vars);
  return r;
}

std::string format_ratfunc(const RatFunc& r) {
  if (r.is_polynomial()) return format_poly(r.num());
  return "(" + format_poly(r.num()) + ")/(" + format_poly(r.den()) + ")";
}

}  // namespace cremona
