#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cremona {

// Coefficient field: the rationals (characteristic 0) or a prime field F_p, p < 2^31.
class Field {
 public:
  constexpr Field() noexcept = default;

  static constexpr Field rationals() noexcept { return Field{}; }
  static Field prime(std::uint64_t p);
  // Accepts "q", "rationals", "fp:7" or "F7".
  static Field parse(const std::string& text);

  constexpr std::uint64_t characteristic() const noexcept { return p_; }
  constexpr bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) noexcept = default;

 private:
  friend class Coeff;
  constexpr explicit Field(std::uint64_t p) noexcept : p_(p) {}
  std::uint64_t p_ = 0;
};

// Element of a Field. Rationals are kept reduced with positive denominator,
// residues lie in [0, p).
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(Field f) : p_(f.characteristic()) {}
  Coeff(Field f, long value);
  Coeff(Field f, const mpz_class& value);
  Coeff(Field f, const mpq_class& value);

  Field field() const;
  bool is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }
  // Sign of a rational; 0 or 1 for residues.
  int sign() const noexcept { return p_ == 0 ? sgn(q_) : (r_ != 0); }
  bool is_integer() const { return p_ != 0 || q_.get_den() == 1; }

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  Coeff inverse() const;
  Coeff pow(long e) const;

  friend bool operator==(const Coeff& a, const Coeff& b);

  std::string to_string() const;

 private:
  void check_same(const Coeff& o) const;

  std::uint64_t p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace cremona
