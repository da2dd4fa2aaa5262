#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cremona {

// Permutation of {0, ..., n-1}; image[i] is where i goes.
struct Permutation {
  std::vector<std::size_t> image;

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  std::size_t size() const { return image.size(); }
  std::size_t operator()(std::size_t i) const { return image[i]; }
  bool is_identity() const;
  Permutation inverse() const;
  // (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit IntMatrix(const std::vector<std::vector<mpz_class>>& rows);

  static IntMatrix identity(std::size_t n);
  // I + c * E_ij.
  static IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, long c);
  // P e_i = e_{p(i)}.
  static IntMatrix permutation(const Permutation& p);
  // Identity with -1 at (i, i).
  static IntMatrix sign(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  mpz_class det() const;
  bool is_unimodular() const;
  // Exact inverse of a unimodular matrix; throws std::invalid_argument otherwise.
  IntMatrix inverse() const;
  IntMatrix transpose() const;
  // P A P^{-1}.
  IntMatrix conjugated(const Permutation& p) const;

  // "[[1,0],[0,1]]".
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> a_;
};

}  // namespace cremona
