#include "cremona/intmatrix.hpp"

#include <stdexcept>

namespace cremona {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  for (std::size_t i = 0; i < n; ++i) p.image.push_back(i);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  Permutation p = identity(n);
  std::swap(p.image.at(i), p.image.at(j));
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) r.image[image[i]] = i;
  return r;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutations of different sizes");
  Permutation r;
  for (std::size_t i = 0; i < q.size(); ++i) r.image.push_back(p.image[q.image[i]]);
  return r;
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<mpz_class>>& rows) : IntMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::elementary(std::size_t n, std::size_t i, std::size_t j, long c) {
  IntMatrix m = identity(n);
  m(i, j) += c;
  return m;
}

IntMatrix IntMatrix::permutation(const Permutation& p) {
  IntMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p(i), i) = 1;
  return m;
}

IntMatrix IntMatrix::sign(std::size_t n, std::size_t i) {
  IntMatrix m = identity(n);
  m(i, i) = -1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

mpz_class IntMatrix::det() const {
  // Bareiss fraction-free elimination.
  if (n_ == 0) return 1;
  std::vector<mpz_class> m = a_;
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n_ + j]; };
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool IntMatrix::is_unimodular() const {
  mpz_class d = det();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  // Gauss-Jordan over Q; a unimodular matrix has an integral inverse.
  const std::size_t n = n_;
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = (*this)(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    mpq_class inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = at(i, n + j);
      if (v.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      r(i, j) = v.get_num();
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::conjugated(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("permutation size mismatch");
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(p(i), p(j)) = (*this)(i, j);
  return r;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace cremona
