#include "cremona/projmap.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/polytext.hpp"
#include "determinant.hpp"

namespace cremona {

namespace {

// Scalar making the tuple canonical: over Q the gcd of all (integer-cleared)
// coefficients, signed by the first nonzero component's leading coefficient.
Coeff tuple_scalar(const std::vector<MultiPoly>& comps) {
  const MultiPoly* first = nullptr;
  for (const auto& c : comps)
    if (!c.is_zero()) {
      first = &c;
      break;
    }
  const Field f = first->field();
  if (!f.is_rational()) return first->leading_coeff();
  mpz_class den = 1, num = 0;
  for (const auto& c : comps)
    for (const auto& t : c.terms())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  for (const auto& c : comps)
    for (const auto& t : c.terms()) {
      mpz_class v = t.coeff.rational().get_num() * (den / t.coeff.rational().get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
  mpq_class s(num, den);
  s.canonicalize();
  if (first->leading_coeff().sign() < 0) s = -s;
  return Coeff(f, s);
}

MultiPoly common_factor(const std::vector<MultiPoly>& comps) {
  std::vector<const MultiPoly*> order;
  for (const auto& c : comps)
    if (!c.is_zero()) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return a->total_degree() < b->total_degree();
  });
  MultiPoly g = normalized(*order.front());
  for (std::size_t i = 1; i < order.size() && !g.is_constant(); ++i) g = gcd(g, *order[i]);
  return g;
}

int validated_degree(const std::vector<MultiPoly>& components) {
  if (components.size() < 2) throw std::invalid_argument("a map of P^n needs at least two components");
  const std::size_t nv = components.size();
  const Field f = components.front().field();
  int degree = -1;
  for (const auto& c : components) {
    if (c.num_vars() != nv) throw std::invalid_argument("component ring does not match n + 1 variables");
    if (c.field() != f) throw std::invalid_argument("components over different fields");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw std::invalid_argument("inhomogeneous component");
    if (degree >= 0 && c.total_degree() != degree) throw std::invalid_argument("components of different degrees");
    degree = c.total_degree();
  }
  if (degree < 0) throw std::invalid_argument("all components are zero");
  return degree;
}

}  // namespace

ProjMap ProjMap::make_coprime(std::vector<MultiPoly> components) {
  int degree = validated_degree(components);
  if (degree == 0) throw std::invalid_argument("map is constant");
  Coeff s = tuple_scalar(components);
  if (!s.is_one()) {
    Coeff inv = s.inverse();
    for (auto& c : components) c = c.scaled(inv);
  }
  ProjMap m;
  m.comps_ = std::move(components);
  m.degree_ = degree;
  return m;
}

ProjMap ProjMap::make(std::vector<MultiPoly> components) {
  int degree = validated_degree(components);
  MultiPoly g = common_factor(components);
  if (!g.is_constant()) {
    for (auto& c : components)
      if (!c.is_zero()) c = *divide_exact(c, g);
    degree -= g.total_degree();
  }
  if (degree == 0) throw std::invalid_argument("map is constant after cancellation");
  Coeff s = tuple_scalar(components);
  if (!s.is_one()) {
    Coeff inv = s.inverse();
    for (auto& c : components) c = c.scaled(inv);
  }
  ProjMap m;
  m.comps_ = std::move(components);
  m.degree_ = degree;
  return m;
}

ProjMap ProjMap::identity(Field f, std::size_t n) {
  ProjMap m;
  for (std::size_t i = 0; i <= n; ++i) m.comps_.push_back(MultiPoly::variable(f, n + 1, i));
  m.degree_ = 1;
  return m;
}

ProjMap ProjMap::linear(Field f, const std::vector<std::vector<Coeff>>& m) {
  const std::size_t nv = m.size();
  std::vector<MultiPoly> comps;
  for (const auto& row : m) {
    if (row.size() != nv) throw std::invalid_argument("linear map needs a square matrix");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nv; ++j)
      if (!row[j].is_zero()) terms.push_back(Term{Exponents::unit(j), row[j]});
    comps.push_back(MultiPoly::from_terms(f, nv, std::move(terms)));
  }
  return make(std::move(comps));
}

MultiPoly pullback(const MultiPoly& p, const ProjMap& g) { return p.substitute(g.components()); }

Composition compose_with_factor(const ProjMap& f, const ProjMap& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("composition of maps on different spaces");
  std::vector<MultiPoly> formal;
  formal.reserve(f.components().size());
  for (const auto& c : f.components()) formal.push_back(pullback(c, g));
  ProjMap result = ProjMap::make(formal);
  for (std::size_t i = 0; i < formal.size(); ++i)
    if (!result[i].is_zero()) return Composition{result, *divide_exact(formal[i], result[i])};
  throw std::logic_error("composition produced no nonzero component");
}

ProjMap compose(const ProjMap& f, const ProjMap& g) { return compose_with_factor(f, g).map; }

MultiPoly jacobian_determinant(const std::vector<MultiPoly>& fs, const std::vector<std::size_t>& vars) {
  if (fs.size() != vars.size() || fs.empty()) throw std::invalid_argument("jacobian needs a square system");
  std::vector<std::vector<MultiPoly>> m(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t v : vars) m[i].push_back(fs[i].derivative(v));
  return detail::laplace_det(m, MultiPoly(fs[0].field(), fs[0].num_vars()));
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  return detail::laplace_det(m, MultiPoly(m[0][0].field(), m[0][0].num_vars()));
}

MultiPoly jacobian(const ProjMap& f) {
  std::vector<std::size_t> vars(f.components().size());
  std::iota(vars.begin(), vars.end(), 0);
  return jacobian_determinant(f.components(), vars);
}

bool equal_up_to_scalar(const ProjMap& f, const ProjMap& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("comparing maps on different spaces");
  if (f.degree() != g.degree()) return false;
  std::size_t pivot = 0;
  while (f[pivot].is_zero()) ++pivot;
  if (g[pivot].is_zero()) return false;
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    if (f[j].is_zero() != g[j].is_zero()) return false;
    if (j == pivot || f[j].is_zero()) continue;
    if (!(f[j] * g[pivot] == g[j] * f[pivot])) return false;
  }
  return true;
}

bool is_linear(const ProjMap& f) { return f.degree() == 1; }

ProjMap parse_map(std::string_view text, Field field) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("map must be written as [p0:p1:...]");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t colon = s.find(':', start);
    parts.push_back(s.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2) throw ParseError("map needs at least two components");
  if (parts.size() > kMaxVars) throw ParseError("map has too many components");
  std::vector<MultiPoly> comps;
  for (const auto& p : parts) comps.push_back(parse_poly(p, field, parts.size()));
  try {
    return ProjMap::make(std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid map: ") + e.what());
  }
}

std::string format_map(const ProjMap& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    if (i) out += ':';
    out += format_poly(f[i]);
  }
  return out + "]";
}

}  // namespace cremona
