#include "cremona/squarefree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact division failed");
  return std::move(*q);
}

using Parts = std::map<unsigned, MultiPoly>;

void add_part(Parts& parts, unsigned mult, const MultiPoly& p) {
  if (p.is_constant()) return;
  auto [it, inserted] = parts.try_emplace(mult, p);
  if (!inserted) it->second *= p;
}

// Yun's algorithm in x_var for p primitive in x_var with positive degree.
void yun(const MultiPoly& p, std::size_t var, Parts& parts) {
  MultiPoly dp = p.derivative(var);
  MultiPoly a0 = gcd(p, dp);
  MultiPoly b = exact(p, a0);
  MultiPoly c = exact(dp, a0);
  MultiPoly d = c - b.derivative(var);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    MultiPoly a = gcd(b, d);
    add_part(parts, i, a);
    b = exact(b, a);
    c = exact(d, a);
    d = c - b.derivative(var);
  }
}

void decompose_rec(const MultiPoly& f, Parts& parts) {
  if (f.is_constant()) return;
  std::size_t var = 0;
  while (!f.depends_on(var)) ++var;
  MultiPoly cont = content_in(f, var);
  MultiPoly prim = cont.is_one() ? f : exact(f, cont);
  decompose_rec(cont, parts);
  yun(prim, var, parts);
}

}  // namespace

MultiPoly SqfDecomp::expand(Field f, std::size_t num_vars) const {
  MultiPoly r = MultiPoly::constant(f, num_vars, unit);
  for (const auto& fac : factors) r *= fac.poly.pow(fac.multiplicity);
  return r;
}

SqfDecomp squarefree_decompose(const MultiPoly& f) {
  if (!f.field().is_rational())
    throw UnsupportedCharacteristic("squarefree decomposition needs characteristic 0, got " +
                                    f.field().name());
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  const Field k = f.field();
  const std::size_t nv = f.num_vars();

  Parts parts;
  Exponents mono = f.monomial_content();
  for (std::size_t v = 0; v < nv; ++v)
    if (mono[v]) add_part(parts, mono[v], MultiPoly::variable(k, nv, v));
  MultiPoly rest = mono.degree() ? exact(f, MultiPoly::monomial(k, nv, mono, Coeff(k, 1))) : f;
  decompose_rec(normalized(rest), parts);

  SqfDecomp out;
  MultiPoly product = MultiPoly::constant(k, nv, 1);
  for (auto& [mult, poly] : parts) {
    MultiPoly p = normalized(poly);
    product *= p.pow(mult);
    out.factors.push_back(SqfFactor{std::move(p), mult});
  }
  MultiPoly unit = exact(f, product);
  if (!unit.is_constant()) throw std::logic_error("squarefree decomposition lost a factor");
  out.unit = unit.leading_coeff();
  return out;
}

std::optional<MultiPoly> square_root_up_to_scalar(const MultiPoly& f) {
  const Field k = f.field();
  if (k.characteristic() == 2) throw UnsupportedCharacteristic("square roots need characteristic other than 2");
  if (f.is_zero()) throw std::invalid_argument("square root of the zero polynomial");
  const std::size_t nv = f.num_vars();
  const Term& lead = f.leading_term();
  Exponents half;
  for (std::size_t v = 0; v < nv; ++v) {
    if (lead.exp[v] % 2 != 0) return std::nullopt;
    half.set(v, lead.exp[v] / 2);
  }
  std::uint32_t lowest = lead.exp.degree();
  for (const auto& t : f.terms()) lowest = std::min(lowest, t.exp.degree());

  // Remainder f / lc(f) - root^2, largest exponent first.
  std::map<Exponents, Coeff, std::greater<>> rem;
  const Coeff inv = lead.coeff.inverse();
  for (const auto& t : f.terms()) rem.emplace(t.exp, t.coeff * inv);
  auto subtract = [&](const Exponents& e, const Coeff& c) {
    auto [it, inserted] = rem.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) rem.erase(it);
    }
  };
  const Coeff one(k, 1), two(k, 2), half_unit = two.inverse();
  std::vector<Term> root{Term{half, one}};
  subtract(half + half, one);
  while (!rem.empty()) {
    const Exponents top = rem.begin()->first;
    if (!half.divides(top)) return std::nullopt;
    Exponents next = top - half;
    if (!(next < root.back().exp) || 2 * next.degree() < lowest) return std::nullopt;
    Coeff c = rem.begin()->second * half_unit;
    for (const auto& t : root) subtract(t.exp + next, two * t.coeff * c);
    subtract(next + next, c * c);
    root.push_back(Term{next, c});
  }
  return MultiPoly::from_terms(k, nv, std::move(root));
}

}  // namespace cremona
