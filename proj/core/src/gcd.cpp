#include "cremona/gcd.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace cremona {

namespace {

using UPoly = std::vector<MultiPoly>;

constexpr std::uint64_t kEvalPrime = 2147483647;  // 2^31 - 1

std::uint32_t var_mask(const MultiPoly& p) {
  std::uint32_t m = 0;
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < p.num_vars(); ++v)
      if (t.exp[v]) m |= 1u << v;
  return m;
}

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.field(), p.num_vars(), 1); }

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact division failed");
  return std::move(*q);
}

// ---- modular coprimality certificate ----

std::uint64_t reduce_coeff(const Coeff& c, std::uint64_t p) {
  if (!c.field().is_rational()) return c.residue() % p;
  const mpq_class& q = c.rational();
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0) return p;  // signals an unusable reduction
  mpz_class inv;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return mpz_class(num * inv % pz).get_ui();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      std::uint64_t f = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Image of p in F_P[x_var] after substituting point[u] for every other variable.
// Returns false when a coefficient does not reduce.
bool univariate_image(const MultiPoly& p, std::size_t var, const std::vector<std::uint64_t>& point,
                      std::uint64_t prime, ModPoly& out) {
  out.assign(p.degree_in(var) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t c = reduce_coeff(t.coeff, prime);
    if (c == prime) return false;
    for (std::size_t u = 0; u < p.num_vars(); ++u)
      if (u != var && t.exp[u]) c = c * powmod(point[u], t.exp[u], prime) % prime;
    std::size_t k = t.exp[var];
    out[k] = (out[k] + c) % prime;
  }
  return true;
}

// Sound test: true only if a and b provably share no nonconstant factor.
bool certainly_coprime(const MultiPoly& a, const MultiPoly& b, std::uint32_t common) {
  std::uint64_t prime = kEvalPrime;
  if (!a.field().is_rational()) {
    prime = a.field().characteristic();
    if (prime < 1000) return false;
  }
  std::mt19937_64 rng(0x5eed ^ (a.size() * 1315423911u) ^ (b.size() << 20));
  std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
  const std::size_t nv = a.num_vars();
  ModPoly ia, ib;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!(common & (1u << v))) continue;
    bool done = false;
    for (int attempt = 0; attempt < 3 && !done; ++attempt) {
      std::vector<std::uint64_t> point(nv);
      for (auto& x : point) x = dist(rng);
      if (!univariate_image(a, v, point, prime, ia) || !univariate_image(b, v, point, prime, ib))
        return false;
      if (ia.back() == 0 || ib.back() == 0) continue;  // leading coefficient vanished
      if (mod_gcd_degree(ia, ib, prime) != 0) return false;
      done = true;
    }
    if (!done) return false;
  }
  return true;
}

// ---- subresultant PRS in one variable ----

UPoly to_upoly(const MultiPoly& p, std::size_t var) { return coefficients_in(p, var); }

MultiPoly from_upoly(const UPoly& u, std::size_t var) {
  MultiPoly r(u.front().field(), u.front().num_vars());
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero()) r += u[k].shifted(Exponents::unit(var, static_cast<std::uint32_t>(k)));
  return r;
}

void trim(UPoly& u) {
  while (u.size() > 1 && u.back().is_zero()) u.pop_back();
}

bool is_zero(const UPoly& u) { return u.size() == 1 && u[0].is_zero(); }

// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  const std::size_t n = b.size() - 1;
  const MultiPoly& lc = b.back();
  long e = static_cast<long>(r.size()) - static_cast<long>(n);
  while (!is_zero(r) && r.size() - 1 >= n) {
    MultiPoly lr = r.back();
    std::size_t shift = r.size() - 1 - n;
    for (auto& c : r)
      if (!c.is_zero()) c *= lc;
    for (std::size_t j = 0; j < n; ++j)
      if (!b[j].is_zero()) r[shift + j] -= lr * b[j];
    r.pop_back();
    if (r.empty()) r.push_back(MultiPoly(lc.field(), lc.num_vars()));
    trim(r);
    --e;
  }
  if (e > 0 && !is_zero(r)) {
    MultiPoly f = lc.pow(static_cast<unsigned>(e));
    for (auto& c : r)
      if (!c.is_zero()) c *= f;
  }
  return r;
}

MultiPoly upoly_content(const UPoly& u) {
  MultiPoly g(u.front().field(), u.front().num_vars());
  std::vector<const MultiPoly*> cs;
  for (const auto& c : u)
    if (!c.is_zero()) cs.push_back(&c);
  std::sort(cs.begin(), cs.end(), [](auto* x, auto* y) { return x->size() < y->size(); });
  for (const MultiPoly* c : cs) {
    g = gcd(g, *c);
    if (g.is_constant()) return one_like(g);
  }
  return g;
}

// Primitive (in x_var) gcd of a and b, both primitive in x_var of positive degree.
MultiPoly subresultant_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  UPoly A = to_upoly(a, var), B = to_upoly(b, var);
  if (A.size() < B.size()) std::swap(A, B);
  MultiPoly g = one_like(a), h = one_like(a);
  for (;;) {
    const std::size_t delta = A.size() - B.size();
    UPoly R = pseudo_remainder(A, B);
    if (is_zero(R)) break;
    if (R.size() == 1) return one_like(a);
    A = std::move(B);
    MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : R)
      if (!c.is_zero()) c = exact(c, divisor);
    B = std::move(R);
    g = A.back();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  MultiPoly c = upoly_content(B);
  for (auto& x : B)
    if (!x.is_zero()) x = exact(x, c);
  return from_upoly(B, var);
}

// a, b nonzero, normalized, without monomial content.
MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return a;
  const std::uint32_t ma = var_mask(a), mb = var_mask(b);
  const std::uint32_t common = ma & mb;
  if (common == 0) return one_like(a);
  if (std::uint32_t only_a = ma & ~mb) return gcd(content_in(a, std::countr_zero(only_a)), b);
  if (std::uint32_t only_b = mb & ~ma) return gcd(a, content_in(b, std::countr_zero(only_b)));
  if (certainly_coprime(a, b, common)) return one_like(a);

  std::size_t var = 0;
  std::uint32_t best = 0;
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    if (!(common & (1u << v))) continue;
    std::uint32_t d = std::max(a.degree_in(v), b.degree_in(v));
    if (d > best) {
      best = d;
      var = v;
    }
  }
  MultiPoly ca = content_in(a, var), cb = content_in(b, var);
  MultiPoly c = gcd(ca, cb);
  MultiPoly pa = ca.is_one() ? a : exact(a, ca);
  MultiPoly pb = cb.is_one() ? b : exact(b, cb);
  return normalized(c * subresultant_gcd(pa, pb, var));
}

}  // namespace

Coeff normalizing_scalar(const MultiPoly& p) {
  const Field f = p.field();
  if (p.is_zero()) return Coeff(f, 1);
  if (!f.is_rational()) return p.leading_coeff();
  mpz_class den = 1, num = 0;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  for (const auto& t : p.terms()) {
    mpz_class v = t.coeff.rational().get_num() * (den / t.coeff.rational().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    if (num == 1) break;
  }
  mpq_class c(num, den);
  c.canonicalize();
  if (p.leading_coeff().sign() < 0) c = -c;
  return Coeff(f, c);
}

MultiPoly normalized(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Coeff c = normalizing_scalar(p);
  return c.is_one() ? p : p.scaled(c.inverse());
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars() || a.field() != b.field())
    throw std::invalid_argument("gcd of polynomials from different rings");
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  Exponents ea = a.monomial_content(), eb = b.monomial_content();
  Exponents m = Exponents::min(ea, eb);
  MultiPoly pa = normalized(ea.degree() ? *divide_exact(a, MultiPoly::monomial(a.field(), a.num_vars(), ea, Coeff(a.field(), 1))) : a);
  MultiPoly pb = normalized(eb.degree() ? *divide_exact(b, MultiPoly::monomial(b.field(), b.num_vars(), eb, Coeff(b.field(), 1))) : b);
  MultiPoly g = gcd_core(pa, pb);
  return m.degree() ? g.shifted(m) : g;
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.field(), a.num_vars());
  MultiPoly g = gcd(a, b);
  return normalized(exact(a, g) * b);
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return upoly_content(coefficients_in(p, var));
}

unsigned multiplicity(const MultiPoly& h, const MultiPoly& f) {
  if (h.is_constant()) throw std::invalid_argument("multiplicity of a constant polynomial");
  if (f.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  unsigned m = 0;
  MultiPoly rest = f;
  while (auto q = divide_exact(rest, h)) {
    rest = std::move(*q);
    ++m;
  }
  return m;
}

}  // namespace cremona
