#include "cremona/certify.hpp"

#include <stdexcept>

#include "cremona/affine.hpp"
#include "cremona/errors.hpp"

namespace cremona {

namespace {

Permutation with_prefix(std::size_t n, std::initializer_list<std::size_t> prefix) {
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

void require_odd_characteristic(Field f) {
  if (f.characteristic() == 2) throw UnsupportedCharacteristic("generator words need a field of characteristic other than 2");
}

}  // namespace

Certifier::Certifier(std::size_t n, Field f, EvalOptions opts) : gens_(n, f), eval_(n, f, opts) {}

ProjMap Certifier::evaluate(const WordExpr& w) { return eval_.evaluate(w); }

Permutation Certifier::lift(const Permutation& p) const {
  Permutation r = Permutation::identity(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) r.image[k + 1] = p.image[k] + 1;
  return r;
}

WordExpr Certifier::letter_word(const GlLetter& g) {
  auto key = std::make_tuple(static_cast<int>(g.kind), g.perm.image, g.i, g.j, g.sign * g.exp);
  if (auto it = letters_.find(key); it != letters_.end()) return it->second;
  const std::size_t n = dim();
  WordExpr w;
  switch (g.kind) {
    case GlKind::Perm:
      w = gens_.relabel(lift(g.exp < 0 ? g.perm.inverse() : g.perm));
      break;
    case GlKind::Theta:
      w = gens_.conjugate(lift(g.perm), gens_.theta());
      break;
    case GlKind::Mu:
      w = gens_.conjugate(lift(g.perm), g.exp < 0 ? gens_.mu().inverse() : gens_.mu());
      break;
    case GlKind::Nu:
      w = gens_.conjugate(lift(g.perm), g.exp < 0 ? gens_.nu().inverse() : gens_.nu());
      break;
    case GlKind::Transvection: {
      // xi_n realizes I + E_21 (1-based); move (1, 0) to (p(i), p(j)).
      Permutation c = with_prefix(n, {g.perm(g.j), g.perm(g.i)});
      const WordExpr& xi = gens_.xi();
      w = gens_.conjugate(lift(c), g.sign * g.exp < 0 ? xi.inverse() : xi);
      break;
    }
  }
  letters_.emplace(std::move(key), w);
  return w;
}

WordExpr Certifier::monomial_word(const IntMatrix& a) {
  require_odd_characteristic(field());
  const std::size_t n = dim();
  if (a.size() != n) throw std::invalid_argument("matrix size does not match the dimension");
  GlWord gw;
  if (n % 2 == 0 || n == 1) {
    gw = gl_full_decompose(a);
  } else {
    if (!gl_odd_test(a)) throw std::invalid_argument("matrix is not in GL(n,Z)_odd");
    gw = gl_odd_decompose(a);
  }
  std::vector<WordExpr> parts;
  parts.reserve(gw.letters.size());
  for (const auto& g : gw.letters) parts.push_back(letter_word(g));
  // Suffix products of the decomposition stay close to the target in size.
  return WordExpr::concat(parts, Fold::Right);
}

Certificate Certifier::certify_monomial(const MonomialMap& m) {
  require_odd_characteristic(field());
  const std::size_t n = dim();
  if (m.dim() != n) throw std::invalid_argument("monomial map dimension does not match");
  Certificate cert;
  cert.target = to_projective(m);
  if (n % 2 == 1 && !gl_odd_test(m.matrix)) {
    // Over any field the parity of the discrepancies decides; the Jacobian of the
    // coefficient-one map over Q exhibits it.
    ObstructionReport r = gn_obstruction(to_projective(MonomialMap::from_matrix(Field::rationals(), m.matrix)));
    if (r.verdict != Verdict::Obstructed)
      throw std::logic_error("matrix outside GL(n,Z)_odd without a Jacobian obstruction");
    cert.result = std::move(r);
    cert.verified = true;
    return cert;
  }
  WordExpr w = monomial_word(m.matrix);
  bool torus = false;
  for (const auto& c : m.coeffs) torus = torus || !c.is_one();
  if (torus) {
    std::vector<Coeff> d{Coeff(field(), 1)};
    d.insert(d.end(), m.coeffs.begin(), m.coeffs.end());
    w = gens_.diagonal(d) * w;
  }
  ProjMap got = evaluate(w);
  if (!equal_up_to_scalar(got, cert.target)) throw std::logic_error("monomial word does not evaluate to the target");
  cert.result = w.flatten(n, field());
  cert.expr = std::move(w);
  cert.verified = true;
  return cert;
}

ProjMap Certifier::tame_elementary_map(const std::vector<unsigned>& v, const Coeff& c) const {
  const std::size_t n = dim();
  if (v.size() + 1 != n) throw std::invalid_argument("exponent vector needs n - 1 entries");
  const Field f = field();
  Exponents e;
  for (std::size_t k = 0; k < v.size(); ++k) e.set(k + 2, v[k]);
  AffMap g{n, {}};
  g.components.push_back(
      RatFunc::from_poly(MultiPoly::variable(f, n + 1, 1) + MultiPoly::monomial(f, n + 1, e, c)));
  for (std::size_t k = 2; k <= n; ++k) g.components.push_back(RatFunc::from_poly(MultiPoly::variable(f, n + 1, k)));
  return from_affine(g);
}

WordExpr Certifier::shear_part(const std::vector<unsigned>& v, const Coeff& c) {
  const std::size_t n = dim();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) m(0, k) = -static_cast<long>(v[k - 1]);
  for (std::size_t k = 2; k < n; ++k) m(1, k) = static_cast<long>(v[k - 1]);
  WordExpr phi = monomial_word(m);
  return WordExpr::concat({phi.inverse(), gens_.shear(1, 0, c), phi});
}

WordExpr Certifier::tame_elementary_word(const std::vector<unsigned>& v, const Coeff& c) {
  require_odd_characteristic(field());
  const std::size_t n = dim();
  if (n < 2) throw std::invalid_argument("tame elementary maps need n >= 2");
  if (v.size() + 1 != n) throw std::invalid_argument("exponent vector needs n - 1 entries");
  if (c.is_zero()) return WordExpr{};
  bool constant = true;
  for (unsigned e : v) constant = constant && e == 0;
  if (constant) return gens_.shear(1, 0, c);

  auto moved = [&](std::size_t pos) {
    std::vector<unsigned> w = v;
    std::swap(w[0], w[pos]);
    return w;
  };
  std::size_t pos = v.size();
  if (v[0] % 2 == 0 || n % 2 == 0) {
    pos = 0;
  } else {
    for (std::size_t k = 0; k < v.size() && pos == v.size(); ++k)
      if (v[k] % 2 == 0) pos = k;
  }
  if (pos < v.size()) return gens_.conjugate(gens_.swap(2, pos + 2), shear_part(moved(pos), c));

  for (std::size_t k = 0; k < v.size() && pos == v.size(); ++k)
    if (v[k] == 1) pos = k;
  if (pos < v.size()) {
    // 2 x2 m = (x2 + 1)^2 m - m - x2^2 m.
    std::vector<unsigned> w2 = moved(pos), w0 = moved(pos);
    w2[0] = 2;
    w0[0] = 0;
    Coeff half = c * Coeff(field(), 2).inverse();
    WordExpr t = gens_.shear(2, 0, Coeff(field(), 1));
    WordExpr square = tame_elementary_word(w2, half);
    WordExpr inner = WordExpr::concat(
        {t.inverse(), square, t, tame_elementary_word(w0, -half), tame_elementary_word(w2, -half)});
    return gens_.conjugate(gens_.swap(2, pos + 2), inner);
  }

  // All exponents odd and at least 3: conjugate by x1 -> x1 x2^2.
  IntMatrix f = IntMatrix::identity(n);
  f(0, 1) = 2;
  WordExpr fw = monomial_word(f);
  std::vector<unsigned> lower = v;
  lower[0] -= 2;
  return WordExpr::concat({fw, tame_elementary_word(lower, c), fw.inverse()});
}

GnWord Certifier::certify_tame_elementary(const std::vector<unsigned>& v, const Coeff& c) {
  WordExpr w = tame_elementary_word(v, c);
  ProjMap got = evaluate(w);
  if (!equal_up_to_scalar(got, tame_elementary_map(v, c)))
    throw std::logic_error("tame elementary word does not evaluate to the target");
  return w.flatten(dim(), field());
}

const char* to_string(TameBranch b) {
  switch (b) {
    case TameBranch::Constant: return "constant";
    case TameBranch::EvenExponent: return "even-exponent";
    case TameBranch::UnitExponent: return "unit-exponent";
    case TameBranch::RaisedOdd: return "raised-odd";
  }
  return "?";
}

TameBranch tame_branch(std::size_t n, const std::vector<unsigned>& v) {
  bool constant = true, even = n % 2 == 0, unit = false;
  for (unsigned e : v) {
    constant = constant && e == 0;
    even = even || e % 2 == 0;
    unit = unit || e == 1;
  }
  if (constant) return TameBranch::Constant;
  if (even) return TameBranch::EvenExponent;
  return unit ? TameBranch::UnitExponent : TameBranch::RaisedOdd;
}

ProjMap nagata_map(Field f) {
  auto x = [&](std::size_t i) { return MultiPoly::variable(f, 4, i); };
  MultiPoly q = x(1) * x(3) - x(2) * x(2);
  MultiPoly two = MultiPoly::constant(f, 4, 2);
  AffMap g{3, {}};
  g.components.push_back(RatFunc::from_poly(x(1) + two * x(2) * q + x(3) * q * q));
  g.components.push_back(RatFunc::from_poly(x(2) + x(3) * q));
  g.components.push_back(RatFunc::from_poly(x(3)));
  return from_affine(g);
}

NagataCheck verify_nagata(Field f) {
  require_odd_characteristic(f);
  Certifier cert(3, f);
  const GeneratorWords& g = cert.generators();
  NagataCheck out;
  out.nagata = nagata_map(f);

  auto x = [&](std::size_t i) { return RatFunc::from_poly(MultiPoly::variable(f, 4, i)); };
  ProjMap alpha = from_fractions({x(0), x(1) + x(2) * x(2) / x(3), x(2), x(3)});
  ProjMap alpha_inv = from_fractions({x(0), x(1) - x(2) * x(2) / x(3), x(2), x(3)});
  ProjMap beta = from_fractions({x(0), x(1), x(2) + x(1) * x(3) * x(3) / (x(0) * x(0)), x(3)});
  out.identity_holds = equal_up_to_scalar(compose(compose(alpha, beta), alpha_inv), out.nagata);

  WordExpr alpha_word = g.conjugate(g.swap(0, 3), g.tau_prime());
  WordExpr beta_word = g.conjugate(g.swap(1, 2), cert.tame_elementary_word({1, 2}, Coeff(f, 1)));
  WordExpr w = WordExpr::concat({alpha_word, beta_word, alpha_word.inverse()});
  out.word_holds = equal_up_to_scalar(cert.evaluate(w), out.nagata);
  ProjMap back = compose(cert.evaluate(w.inverse()), out.nagata);
  out.inverse_holds = back == ProjMap::identity(f, 3);
  out.word = w.flatten(3, f);
  return out;
}

}  // namespace cremona
