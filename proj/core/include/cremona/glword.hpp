#pragma once

#include <cstddef>
#include <vector>

#include "cremona/intmatrix.hpp"

namespace cremona {

// Letters of words in GL(n, Z). Theta = diag(-1, 1, ...), Mu = I + 2 E_21,
// Nu = I + E_21 + E_31 (1-based), each conjugated by perm (P M P^{-1}) and raised
// to exp = +-1. Perm is the permutation matrix of perm. Transvection is
// I + sign * E_ij (0-based i, j), also conjugated by perm.
enum class GlKind { Perm, Theta, Mu, Nu, Transvection };

struct GlLetter {
  GlKind kind = GlKind::Perm;
  Permutation perm;
  std::size_t i = 0;
  std::size_t j = 0;
  int sign = 1;
  int exp = 1;

  friend bool operator==(const GlLetter&, const GlLetter&) = default;
};

const char* to_string(GlKind k);
IntMatrix letter_matrix(const GlLetter& letter, std::size_t n);
GlLetter inverse(const GlLetter& letter);

struct GlWord {
  std::size_t n = 0;
  std::vector<GlLetter> letters;
  IntMatrix target;

  // Left-to-right product of the letter matrices.
  IntMatrix product() const;
};

// Every column has an odd entry sum. Throws std::invalid_argument unless unimodular.
bool gl_odd_test(const IntMatrix& a);

// Word over Perm, Theta, Mu, Nu for A in GL(n, Z)_odd, n >= 3.
GlWord gl_odd_decompose(const IntMatrix& a);

// Word over Perm, Theta (sign letters) and Transvection(i, j, +-1) for unimodular A.
GlWord gl_full_decompose(const IntMatrix& a);

// Orbit size of the all-ones vector under right multiplication by GL(n, F_2).
std::size_t f2_orbit_index(std::size_t n);

}  // namespace cremona
