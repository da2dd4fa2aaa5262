#include "cremona/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace cremona {

// ---- Exponents ----

Exponents Exponents::unit(std::size_t var, std::uint32_t power) {
  Exponents e;
  e.set(var, power);
  return e;
}

void Exponents::set(std::size_t i, std::uint32_t value) {
  if (i >= kMaxVars) throw std::out_of_range("variable index beyond supported count");
  if (value > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  deg_ = deg_ - e_[i] + value;
  e_[i] = static_cast<std::uint16_t>(value);
}

Exponents Exponents::operator+(const Exponents& o) const {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t v = std::uint32_t{e_[i]} + o.e_[i];
    if (v > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(v);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Exponents Exponents::operator-(const Exponents& o) const {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Exponents::divides(const Exponents& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Exponents Exponents::min(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Exponents Exponents::max(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

std::size_t Exponents::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < kMaxVars; i += 4) {
    std::uint64_t chunk = std::uint64_t{e_[i]} | (std::uint64_t{e_[i + 1]} << 16) |
                          (std::uint64_t{e_[i + 2]} << 32) | (std::uint64_t{e_[i + 3]} << 48);
    h ^= chunk + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---- MultiPoly ----

namespace {

bool term_greater(const Term& a, const Term& b) { return a.exp > b.exp; }

using Accumulator = std::unordered_map<Exponents, Coeff, ExponentsHash>;

void accumulate(Accumulator& acc, const Exponents& e, const Coeff& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) it->second += c;
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(Field f, std::size_t num_vars) : field_(f), nv_(num_vars) {
  if (num_vars > kMaxVars) throw std::invalid_argument("too many variables");
}

MultiPoly MultiPoly::constant(Field f, std::size_t num_vars, const Coeff& c) {
  MultiPoly p(f, num_vars);
  if (!c.is_zero()) p.terms_.push_back(Term{Exponents{}, c});
  return p;
}

MultiPoly MultiPoly::constant(Field f, std::size_t num_vars, long c) {
  return constant(f, num_vars, Coeff(f, c));
}

MultiPoly MultiPoly::variable(Field f, std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::out_of_range("variable index out of range");
  return monomial(f, num_vars, Exponents::unit(var), Coeff(f, 1));
}

MultiPoly MultiPoly::monomial(Field f, std::size_t num_vars, const Exponents& e, const Coeff& c) {
  MultiPoly p(f, num_vars);
  if (!c.is_zero()) p.terms_.push_back(Term{e, c});
  return p;
}

MultiPoly MultiPoly::from_terms(Field f, std::size_t num_vars, std::vector<Term> terms) {
  MultiPoly p(f, num_vars);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.exp.degree() != terms_.front().exp.degree()) return false;
  return true;
}

Coeff MultiPoly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().exp.degree() == 0) return terms_.back().coeff;
  return Coeff(field_);
}

Exponents MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.front().exp;
  for (const auto& t : terms_) m = Exponents::min(m, t.exp);
  return m;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (nv_ != o.nv_) throw std::invalid_argument("polynomials have different variable counts");
  if (field_ != o.field_) throw std::invalid_argument("polynomials over different fields");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& o, bool negate) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp > b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp > a->exp) {
      out.push_back(Term{b->exp, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      Coeff c = negate ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back(Term{a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.field_, a.nv_);
  if (a.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coeff);
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) accumulate(acc, s.exp + t.exp, s.coeff * t.coeff);
  MultiPoly r(a.field_, a.nv_);
  r.terms_ = drain(acc);
  return r;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
  if (c.is_zero()) return MultiPoly(field_, nv_);
  MultiPoly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Exponents& e) const {
  MultiPoly r = *this;
  if (e.degree() == 0) return r;
  for (auto& t : r.terms_) t.exp = t.exp + e;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(field_, nv_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nv_) throw std::out_of_range("derivative variable out of range");
  MultiPoly r(field_, nv_);
  for (const auto& t : terms_) {
    std::uint32_t k = t.exp[var];
    if (k == 0) continue;
    Coeff c = t.coeff * Coeff(field_, static_cast<long>(k));
    if (c.is_zero()) continue;
    Exponents e = t.exp;
    e.set(var, k - 1);
    r.terms_.push_back(Term{e, std::move(c)});
  }
  // Lowering one exponent can reorder terms of different degree classes.
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const {
  if (values.size() != nv_) throw std::invalid_argument("substitution needs one value per variable");
  if (nv_ == 0) return *this;
  const Field f = values[0].field();
  const std::size_t target_nv = values[0].num_vars();
  if (f != field_) throw std::invalid_argument("substituted values live over another field");
  for (const auto& v : values)
    if (v.num_vars() != target_nv || v.field() != f)
      throw std::invalid_argument("substituted values live in different rings");

  bool monomial_values = true;
  for (const auto& v : values) monomial_values = monomial_values && v.is_monomial();
  if (monomial_values) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e;
      Coeff c = t.coeff;
      for (std::size_t var = 0; var < nv_; ++var) {
        std::uint32_t k = t.exp[var];
        if (k == 0) continue;
        const Term& v = values[var].terms_[0];
        for (std::size_t j = 0; j < target_nv; ++j)
          if (v.exp[j]) e.set(j, e[j] + k * v.exp[j]);
        if (!v.coeff.is_one()) c *= v.coeff.pow(k);
      }
      out.push_back(Term{e, c});
    }
    return from_terms(f, target_nv, std::move(out));
  }

  std::vector<std::vector<MultiPoly>> powers(nv_);
  auto power = [&](std::size_t var, std::uint32_t k) -> const MultiPoly& {
    auto& p = powers[var];
    if (p.empty()) p.push_back(constant(f, target_nv, 1));
    while (p.size() <= k) p.push_back(p.back() * values[var]);
    return p[k];
  };

  // Group terms by the exponent of each variable in turn so that shared
  // prefixes are multiplied once.
  std::vector<const Term*> all;
  all.reserve(terms_.size());
  for (const auto& t : terms_) all.push_back(&t);

  std::function<MultiPoly(std::vector<const Term*>&, std::size_t)> rec =
      [&](std::vector<const Term*>& group, std::size_t var) -> MultiPoly {
    if (var == nv_) {
      Coeff c(f);
      for (const Term* t : group) c += t->coeff;
      return constant(f, target_nv, c);
    }
    std::map<std::uint32_t, std::vector<const Term*>> by_power;
    for (const Term* t : group) by_power[t->exp[var]].push_back(t);
    MultiPoly sum(f, target_nv);
    for (auto& [k, sub] : by_power) {
      MultiPoly inner = rec(sub, var + 1);
      if (inner.is_zero()) continue;
      sum += k == 0 ? inner : inner * power(var, k);
    }
    return sum;
  };
  return rec(all, 0);
}

MultiPoly MultiPoly::evaluate_at(std::size_t var, const Coeff& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t k = t.exp[var];
    Exponents e = t.exp;
    e.set(var, 0);
    out.push_back(Term{e, k == 0 ? t.coeff : t.coeff * c.pow(k)});
  }
  return from_terms(field_, nv_, std::move(out));
}

MultiPoly MultiPoly::homogenize(std::size_t var, std::uint32_t degree) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exp.degree() > degree) throw std::invalid_argument("homogenization degree too small");
    Exponents e = t.exp;
    e.set(var, e[var] + degree - t.exp.degree());
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(field_, nv_, std::move(out));
}

MultiPoly MultiPoly::with_num_vars(std::size_t num_vars) const {
  for (std::size_t v = num_vars; v < nv_; ++v)
    if (depends_on(v)) throw std::invalid_argument("cannot drop a variable that occurs");
  MultiPoly r(field_, num_vars);
  r.terms_ = terms_;
  return r;
}

MultiPoly MultiPoly::rename(std::span<const std::size_t> target, std::size_t num_vars) const {
  if (target.size() != nv_) throw std::invalid_argument("rename needs one target per variable");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e;
    for (std::size_t v = 0; v < nv_; ++v)
      if (t.exp[v]) {
        if (target[v] >= num_vars) throw std::out_of_range("rename target out of range");
        e.set(target[v], e[target[v]] + t.exp[v]);
      }
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(field_, num_vars, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nv_ != b.nv_ || a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

// ---- division ----

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.num_vars() != b.num_vars() || a.field() != b.field())
    throw std::invalid_argument("polynomials from different rings");
  const Field f = a.field();
  const std::size_t nv = a.num_vars();
  if (a.is_zero()) return MultiPoly(f, nv);

  const Term& lb = b.leading_term();
  if (b.is_monomial()) {
    std::vector<Term> out;
    out.reserve(a.size());
    Coeff inv = lb.coeff.inverse();
    for (const auto& t : a.terms()) {
      if (!lb.exp.divides(t.exp)) return std::nullopt;
      out.push_back(Term{t.exp - lb.exp, t.coeff * inv});
    }
    MultiPoly q = MultiPoly::from_terms(f, nv, std::move(out));
    return q;
  }
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  // Cheap necessary conditions before the full division.
  for (std::size_t v = 0; v < nv; ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;

  Coeff inv = lb.coeff.inverse();
  std::map<Exponents, Coeff, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exp, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lb.exp.divides(top->first)) return std::nullopt;
    Exponents qe = top->first - lb.exp;
    Coeff qc = top->second * inv;
    rem.erase(top);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const Term& t = b.terms()[i];
      Exponents e = qe + t.exp;
      Coeff c = -(qc * t.coeff);
      auto [it, inserted] = rem.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back(Term{qe, std::move(qc)});
  }
  return MultiPoly::from_terms(f, nv, std::move(quotient));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(p.is_zero() ? 1 : p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Exponents e = t.exp;
    std::uint32_t k = e[var];
    e.set(var, 0);
    buckets[k].push_back(Term{e, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.field(), p.num_vars(), std::move(b)));
  return out;
}

}  // namespace cremona
