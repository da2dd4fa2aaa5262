#include "cremona/monomial_map.hpp"

#include <stdexcept>

namespace cremona {

namespace {

Coeff coeff_power(const Coeff& c, const mpz_class& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("monomial exponent too large");
  return c.pow(e.get_si());
}

}  // namespace

MonomialMap MonomialMap::identity(Field f, std::size_t n) { return from_matrix(f, IntMatrix::identity(n)); }

MonomialMap MonomialMap::from_matrix(Field f, const IntMatrix& m) {
  if (!m.is_unimodular()) throw std::invalid_argument("monomial map needs a unimodular matrix");
  return MonomialMap{std::vector<Coeff>(m.size(), Coeff(f, 1)), m};
}

MonomialMap monomial_compose(const MonomialMap& a, const MonomialMap& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("monomial maps of different dimension");
  MonomialMap r;
  r.matrix = a.matrix * b.matrix;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Coeff c = a.coeffs[i];
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.matrix(i, j) != 0) c *= coeff_power(b.coeffs[j], a.matrix(i, j));
    r.coeffs.push_back(c);
  }
  return r;
}

MonomialMap monomial_inverse(const MonomialMap& m) {
  // Solve y = alpha * x^A for x: x = (y / alpha)^(A^{-1}).
  MonomialMap r;
  r.matrix = m.matrix.inverse();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Coeff c(m.field(), 1);
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (r.matrix(i, j) != 0) c *= coeff_power(m.coeffs[j].inverse(), r.matrix(i, j));
    r.coeffs.push_back(c);
  }
  return r;
}

ProjMap to_projective(const MonomialMap& m) {
  const std::size_t n = m.dim();
  const Field f = m.field();
  // Laurent exponent vectors of degree 0 in x0..xn, one per component.
  std::vector<std::vector<long>> laurent(n + 1, std::vector<long>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    long x0 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.matrix(i, j).fits_slong_p()) throw std::overflow_error("monomial exponent too large");
      long a = m.matrix(i, j).get_si();
      laurent[i + 1][j + 1] = a;
      x0 -= a;
    }
    laurent[i + 1][0] = x0;
  }
  std::vector<long> low(n + 1, 0);
  for (const auto& row : laurent)
    for (std::size_t v = 0; v <= n; ++v) low[v] = std::min(low[v], row[v]);
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) {
    Exponents e;
    for (std::size_t v = 0; v <= n; ++v) e.set(v, static_cast<std::uint32_t>(laurent[i][v] - low[v]));
    comps.push_back(MultiPoly::monomial(f, n + 1, e, i == 0 ? Coeff(f, 1) : m.coeffs[i - 1]));
  }
  return ProjMap::make(std::move(comps));
}

std::optional<MonomialMap> from_projective(const ProjMap& f) {
  for (const auto& c : f.components())
    if (!c.is_monomial()) return std::nullopt;
  const std::size_t n = f.dim();
  const Term& base = f[0].leading_term();
  MonomialMap m;
  m.matrix = IntMatrix(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Term& t = f[i].leading_term();
    for (std::size_t j = 1; j <= n; ++j)
      m.matrix(i - 1, j - 1) = static_cast<long>(t.exp[j]) - static_cast<long>(base.exp[j]);
    m.coeffs.push_back(t.coeff / base.coeff);
  }
  if (!m.matrix.is_unimodular()) return std::nullopt;
  return m;
}

}  // namespace cremona
