#include "cremona/glword.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cremona {

namespace {

// Permutation of {0..n-1} with the given prefix of images; the remaining
// points go to the remaining images in increasing order.
Permutation with_prefix(std::size_t n, const std::vector<std::size_t>& prefix) {
  Permutation p;
  std::vector<bool> used(n, false);
  for (std::size_t v : prefix) {
    p.image.push_back(v);
    used[v] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) p.image.push_back(v);
  return p;
}

GlLetter perm_letter(const Permutation& p) { return GlLetter{GlKind::Perm, p, 0, 0, 1, 1}; }

GlLetter sign_letter(std::size_t n, std::size_t i) {
  return GlLetter{GlKind::Theta, Permutation::transposition(n, 0, i), 0, 0, 1, 1};
}

GlLetter transvection_letter(std::size_t n, std::size_t i, std::size_t j, int sign) {
  return GlLetter{GlKind::Transvection, Permutation::identity(n), i, j, sign, 1};
}

int sgn(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

class Reducer {
 public:
  explicit Reducer(const IntMatrix& a) : c_(a), n_(a.size()) {}

  void apply(const GlLetter& g) {
    c_ = letter_matrix(g, n_) * c_;
    applied_.push_back(g);
  }
  const IntMatrix& current() const { return c_; }
  // Letters whose product is the original matrix times current()^{-1}.
  std::vector<GlLetter> undo_word() const {
    std::vector<GlLetter> w;
    for (const auto& g : applied_) w.push_back(inverse(g));
    return w;
  }

 private:
  IntMatrix c_;
  std::size_t n_;
  std::vector<GlLetter> applied_;
};

}  // namespace

const char* to_string(GlKind k) {
  switch (k) {
    case GlKind::Perm:
      return "perm";
    case GlKind::Theta:
      return "theta";
    case GlKind::Mu:
      return "mu";
    case GlKind::Nu:
      return "nu";
    case GlKind::Transvection:
      return "transvection";
  }
  return "?";
}

IntMatrix letter_matrix(const GlLetter& g, std::size_t n) {
  if (g.perm.size() != n) throw std::invalid_argument("letter permutation has wrong size");
  IntMatrix m;
  switch (g.kind) {
    case GlKind::Perm:
      m = IntMatrix::permutation(g.perm);
      return g.exp < 0 ? IntMatrix::permutation(g.perm.inverse()) : m;
    case GlKind::Theta:
      m = IntMatrix::sign(n, 0);
      break;
    case GlKind::Mu:
      if (n < 2) throw std::invalid_argument("mu needs n >= 2");
      m = IntMatrix::elementary(n, 1, 0, 2 * g.exp);
      break;
    case GlKind::Nu:
      if (n < 3) throw std::invalid_argument("nu needs n >= 3");
      m = IntMatrix::identity(n);
      m(1, 0) = g.exp;
      m(2, 0) = g.exp;
      break;
    case GlKind::Transvection:
      if (g.i == g.j || g.i >= n || g.j >= n) throw std::invalid_argument("bad transvection indices");
      m = IntMatrix::elementary(n, g.i, g.j, g.sign * g.exp);
      break;
  }
  return g.perm.is_identity() ? m : m.conjugated(g.perm);
}

GlLetter inverse(const GlLetter& g) {
  GlLetter r = g;
  if (g.kind != GlKind::Theta) r.exp = -g.exp;
  return r;
}

IntMatrix GlWord::product() const {
  IntMatrix p = IntMatrix::identity(n);
  for (const auto& g : letters) p = p * letter_matrix(g, n);
  return p;
}

bool gl_odd_test(const IntMatrix& a) {
  if (!a.is_unimodular()) throw std::invalid_argument("matrix is not unimodular");
  for (std::size_t j = 0; j < a.size(); ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a(i, j);
    if (mpz_even_p(s.get_mpz_t())) return false;
  }
  return true;
}

GlWord gl_full_decompose(const IntMatrix& a) {
  if (!a.is_unimodular()) throw std::invalid_argument("matrix is not unimodular");
  const std::size_t n = a.size();
  Reducer red(a);
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c below the diagonal, pivoting on the smallest entry.
    for (;;) {
      const IntMatrix& m = red.current();
      std::size_t p = n;
      for (std::size_t r = c; r < n; ++r)
        if (m(r, c) != 0 && (p == n || abs(m(r, c)) < abs(m(p, c)))) p = r;
      if (p == n) throw std::logic_error("unimodular matrix lost rank");
      bool done = true;
      for (std::size_t r = c; r < n; ++r) {
        if (r == p || red.current()(r, c) == 0) continue;
        mpz_class q = red.current()(r, c) / red.current()(p, c);
        int s = -sgn(q);
        for (mpz_class k = abs(q); k > 0; --k) red.apply(transvection_letter(n, r, p, s));
        if (red.current()(r, c) != 0) done = false;
      }
      if (done) {
        if (p != c) red.apply(perm_letter(Permutation::transposition(n, c, p)));
        break;
      }
    }
    if (red.current()(c, c) < 0) red.apply(sign_letter(n, c));
    for (std::size_t r = 0; r < c; ++r) {
      mpz_class q = red.current()(r, c);
      int s = -sgn(q);
      for (mpz_class k = abs(q); k > 0; --k) red.apply(transvection_letter(n, r, c, s));
    }
  }
  if (!(red.current() == IntMatrix::identity(n))) throw std::logic_error("elimination did not reach the identity");
  GlWord w{n, red.undo_word(), a};
  if (!(w.product() == a)) throw std::logic_error("decomposition does not reproduce the matrix");
  return w;
}

GlWord gl_odd_decompose(const IntMatrix& a) {
  if (!gl_odd_test(a)) throw std::invalid_argument("matrix is not in GL(n,Z)_odd");
  const std::size_t n = a.size();
  if (n < 3) throw std::invalid_argument("odd decomposition needs n >= 3");
  const std::size_t last = n - 1;
  Reducer red(a);

  auto column_measure = [&] {
    mpz_class sum = 0, mx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class v = abs(red.current()(i, last));
      sum += v;
      if (v > mx) mx = v;
    }
    return std::pair{sum, mx};
  };

  for (;;) {
    // Step 1: sort the last column by absolute value, then make it nonnegative.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return abs(red.current()(x, last)) < abs(red.current()(y, last));
    });
    Permutation pi = Permutation::identity(n);
    for (std::size_t k = 0; k < n; ++k) pi.image[order[k]] = k;
    if (!pi.is_identity()) red.apply(perm_letter(pi));
    for (std::size_t i = 0; i < n; ++i)
      if (red.current()(i, last) < 0) red.apply(sign_letter(n, i));

    bool unit = red.current()(last, last) == 1;
    for (std::size_t i = 0; i < last && unit; ++i) unit = red.current()(i, last) == 0;
    if (unit) break;
    if (red.current()(n - 2, last) == 0)
      throw std::logic_error("column with a single nonzero entry must be the unit vector");

    // Step 2: a_{n-2} -= a_{n-1}, a_n -= a_{n-1} (1-based) via a conjugate of Nu^{-1}.
    auto before = column_measure();
    red.apply(GlLetter{GlKind::Nu, with_prefix(n, {n - 2, n - 3, n - 1}), 0, 0, 1, -1});
    auto after = column_measure();
    if (!(after < before)) throw std::logic_error("odd reduction failed to decrease the last column");
  }

  // Now current = [[B, 0], [r, 1]]. Lift a full decomposition of B.
  const IntMatrix& c = red.current();
  IntMatrix b(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = 0; j < n - 1; ++j) b(i, j) = c(i, j);
  GlWord bw = gl_full_decompose(b);
  std::vector<GlLetter> lifted;
  for (const auto& g : bw.letters) {
    Permutation p = g.perm;
    p.image.push_back(last);
    switch (g.kind) {
      case GlKind::Perm:
      case GlKind::Theta:
        lifted.push_back(GlLetter{g.kind, p, 0, 0, 1, g.exp});
        break;
      case GlKind::Transvection:
        lifted.push_back(GlLetter{GlKind::Nu, with_prefix(n, {g.j, g.i, last}), 0, 0, 1, g.sign * g.exp});
        break;
      default:
        throw std::logic_error("unexpected letter in full decomposition");
    }
  }
  IntMatrix l = IntMatrix::identity(n);
  for (const auto& g : lifted) l = l * letter_matrix(g, n);
  IntMatrix k = c * l.inverse();

  std::vector<GlLetter> word = red.undo_word();
  for (std::size_t j = 0; j < last; ++j) {
    const mpz_class& r = k(last, j);
    if (mpz_odd_p(r.get_mpz_t())) throw std::logic_error("kernel part has an odd entry");
    for (mpz_class t = abs(r) / 2; t > 0; --t)
      word.push_back(GlLetter{GlKind::Mu, with_prefix(n, {j, last}), 0, 0, 1, sgn(r)});
  }
  word.insert(word.end(), lifted.begin(), lifted.end());
  GlWord w{n, std::move(word), a};
  if (!(w.product() == a)) throw std::logic_error("odd decomposition does not reproduce the matrix");
  return w;
}

std::size_t f2_orbit_index(std::size_t n) {
  if (n < 1 || n > 20) throw std::invalid_argument("f2 orbit index needs 1 <= n <= 20");
  const std::uint32_t start = (1u << n) - 1;
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::deque<std::uint32_t> queue{start};
  seen[start] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    // v * (I + E_ij) adds v_i to coordinate j.
    for (std::size_t i = 0; i < n; ++i) {
      if (!(v >> i & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::uint32_t w = v ^ (1u << j);
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace cremona
