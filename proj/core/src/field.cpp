#include "cremona/field.hpp"

#include <cctype>
#include <stdexcept>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " +
                                std::to_string(p));
  return Field{p};
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "q" || t == "rationals" || t == "rational" || t == "qq") return rationals();
  std::string digits;
  if (t.rfind("fp:", 0) == 0)
    digits = t.substr(3);
  else if (t.rfind("f", 0) == 0)
    digits = t.substr(1);
  else
    throw ParseError("unknown field '" + text + "'");
  if (digits.empty() || digits.size() > 10 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad field characteristic in '" + text + "'");
  try {
    return prime(std::stoull(digits));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string Field::name() const {
  return p_ == 0 ? std::string("rationals") : "fp:" + std::to_string(p_);
}

Coeff::Coeff(Field f, long value) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(mpz_class(value), p_);
}

Coeff::Coeff(Field f, const mpz_class& value) : p_(f.characteristic()) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(value, p_);
}

Coeff::Coeff(Field f, const mpq_class& value) : p_(f.characteristic()) {
  if (p_ == 0) {
    // mpq assignment assumes a positive denominator; values built from two ints may not have one.
    q_ = mpq_class(value.get_num(), value.get_den());
    q_.canonicalize();
    return;
  }
  std::uint64_t den = reduce(value.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  r_ = reduce(value.get_num(), p_) * inverse_mod(den, p_) % p_;
}

Field Coeff::field() const { return Field{p_}; }

const mpq_class& Coeff::rational() const {
  if (p_ != 0) throw std::logic_error("rational() on a prime-field coefficient");
  return q_;
}

std::uint64_t Coeff::residue() const {
  if (p_ == 0) throw std::logic_error("residue() on a rational coefficient");
  return r_;
}

void Coeff::check_same(const Coeff& o) const {
  if (p_ != o.p_) throw std::invalid_argument("coefficients from different fields");
}

Coeff Coeff::operator-() const {
  Coeff c = *this;
  if (p_ == 0)
    c.q_ = -q_;
  else
    c.r_ = r_ == 0 ? 0 : p_ - r_;
  return c;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  check_same(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % p_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  check_same(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = (r_ + p_ - o.r_) % p_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % p_;
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  if (p_ == 0)
    q_ /= o.q_;
  else
    r_ = r_ * inverse_mod(o.r_, p_) % p_;
  return *this;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  Coeff c = *this;
  if (p_ == 0)
    c.q_ = 1 / q_;
  else
    c.r_ = inverse_mod(r_, p_);
  return c;
}

Coeff Coeff::pow(long e) const {
  Coeff base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Coeff result(field(), 1);
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Coeff::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace cremona
