#include "cremona/gnword.hpp"

#include <stdexcept>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

void check_degree(const ProjMap& p, const EvalOptions& opts) {
  if (p.degree() > opts.max_degree) throw DegreeGuardrail(p.degree(), opts.max_degree);
}

ProjMap compose_sigma(const ProjMap& p) {
  const std::size_t nv = p.components().size();
  ProjMap s = sigma_map(p.field(), nv - 1);
  std::vector<MultiPoly> formal;
  formal.reserve(nv);
  for (const auto& c : p.components()) formal.push_back(c.substitute(s.components()));
  // sigma is an isomorphism off the coordinate hyperplanes, so only a monomial can cancel.
  bool have = false;
  Exponents common;
  for (const auto& c : formal) {
    if (c.is_zero()) continue;
    common = have ? Exponents::min(common, c.monomial_content()) : c.monomial_content();
    have = true;
  }
  if (common.degree() > 0) {
    MultiPoly m = MultiPoly::monomial(p.field(), nv, common, Coeff(p.field(), 1));
    for (auto& c : formal)
      if (!c.is_zero()) c = *divide_exact(c, m);
  }
  return ProjMap::make_coprime(std::move(formal));
}

ProjMap compose_linear(const ProjMap& p, const CoeffMatrix& lin) {
  const std::size_t nv = p.components().size();
  const Field f = p.field();
  std::vector<MultiPoly> forms;
  forms.reserve(nv);
  for (const auto& row : lin) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nv; ++j)
      if (!row[j].is_zero()) terms.push_back(Term{Exponents::unit(j), row[j]});
    forms.push_back(MultiPoly::from_terms(f, nv, std::move(terms)));
  }
  std::vector<MultiPoly> formal;
  formal.reserve(nv);
  for (const auto& c : p.components()) formal.push_back(c.substitute(forms));
  return ProjMap::make_coprime(std::move(formal));
}

}  // namespace

ProjMap sigma_map(Field f, std::size_t n) {
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) {
    Exponents e;
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) e.set(j, 1);
    comps.push_back(MultiPoly::monomial(f, n + 1, e, Coeff(f, 1)));
  }
  return ProjMap::make_coprime(std::move(comps));
}

ProjMap letter_map(const GnLetter& letter, std::size_t n, Field f) {
  if (letter.sigma) return sigma_map(f, n);
  if (letter.lin.size() != n + 1) throw std::invalid_argument("linear letter has wrong size");
  return ProjMap::linear(f, letter.lin);
}

CoeffMatrix inverse_matrix(const CoeffMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  const Field f = m[0][0].field();
  CoeffMatrix a = m;
  CoeffMatrix inv(n, std::vector<Coeff>(n, Coeff(f)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Coeff(f, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Coeff s = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Coeff t = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= t * a[c][j];
        inv[r][j] -= t * inv[c][j];
      }
    }
  }
  return inv;
}

GnLetter inverse(const GnLetter& letter) {
  if (letter.sigma) return letter;
  return GnLetter::make_linear(inverse_matrix(letter.lin));
}

GnWord inverse(const GnWord& w) {
  GnWord r{w.n, w.field, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(inverse(*it));
  return r;
}

GnLetter permutation_letter(Field f, const Permutation& rho) {
  const std::size_t n = rho.size();
  CoeffMatrix m(n, std::vector<Coeff>(n, Coeff(f)));
  for (std::size_t i = 0; i < n; ++i) m[rho.image[i]][i] = Coeff(f, 1);
  return GnLetter::make_linear(std::move(m));
}

ProjMap compose_letter(const ProjMap& p, const GnLetter& letter) {
  if (letter.sigma) return compose_sigma(p);
  if (letter.lin.size() != p.components().size()) throw std::invalid_argument("linear letter has wrong size");
  return compose_linear(p, letter.lin);
}

ProjMap eval_word(const GnWord& w, const EvalOptions& opts) {
  ProjMap p = ProjMap::identity(w.field, w.n);
  if (opts.fold == Fold::Left) {
    for (const auto& l : w.letters) {
      p = compose_letter(p, l);
      check_degree(p, opts);
    }
  } else {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      p = compose(letter_map(*it, w.n, w.field), p);
      check_degree(p, opts);
    }
  }
  return p;
}

WordExpr WordExpr::letter(GnLetter l) {
  WordExpr w;
  auto node = std::make_shared<Node>();
  node->leaf = std::move(l);
  node->count = 1;
  w.node_ = std::move(node);
  return w;
}

WordExpr WordExpr::concat(const std::vector<WordExpr>& parts, Fold fold) {
  std::vector<WordExpr> kept;
  std::size_t count = 0;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    kept.push_back(p);
    count += p.letter_count();
  }
  if (kept.empty()) return WordExpr{};
  if (kept.size() == 1) return kept.front();
  auto node = std::make_shared<Node>();
  node->parts = std::move(kept);
  node->fold = fold;
  node->count = count;
  WordExpr w;
  w.node_ = std::move(node);
  return w;
}

WordExpr WordExpr::inverse() const {
  WordExpr w = *this;
  w.inverted_ = !inverted_;
  return w;
}

std::size_t WordExpr::letter_count() const { return node_ ? node_->count : 0; }

void WordExpr::append_to(std::vector<GnLetter>& out, bool inverted) const {
  if (!node_) return;
  const bool inv = inverted != inverted_;
  if (node_->leaf) {
    out.push_back(inv ? cremona::inverse(*node_->leaf) : *node_->leaf);
    return;
  }
  if (inv) {
    for (auto it = node_->parts.rbegin(); it != node_->parts.rend(); ++it) it->append_to(out, true);
  } else {
    for (const auto& p : node_->parts) p.append_to(out, false);
  }
}

GnWord WordExpr::flatten(std::size_t n, Field f) const {
  GnWord w{n, f, {}};
  w.letters.reserve(letter_count());
  append_to(w.letters, false);
  return w;
}

WordEvaluator::WordEvaluator(std::size_t n, Field f, EvalOptions opts) : n_(n), field_(f), opts_(opts) {}

ProjMap WordEvaluator::evaluate(const WordExpr& w) {
  if (w.empty()) return ProjMap::identity(field_, n_);
  Key key{w.node_.get(), w.inverted_};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.map;
  ProjMap m = evaluate_node(w);
  memo_.emplace(key, Entry{w.node_, m});
  return m;
}

ProjMap WordEvaluator::evaluate_node(const WordExpr& w) {
  const auto& node = *w.node_;
  if (node.leaf) {
    GnLetter l = w.inverted_ ? inverse(*node.leaf) : *node.leaf;
    return letter_map(l, n_, field_);
  }
  // Effective parts in order are parts, or the inverted parts reversed.
  const bool from_right = (node.fold == Fold::Right) != w.inverted_;
  std::optional<ProjMap> acc;
  auto step = [&](const WordExpr& part) {
    WordExpr eff = w.inverted_ ? part.inverse() : part;
    if (from_right) {
      ProjMap sub = evaluate(eff);
      acc = acc ? compose(sub, *acc) : sub;
    } else if (acc && eff.node_->leaf) {
      GnLetter l = eff.inverted_ ? inverse(*eff.node_->leaf) : *eff.node_->leaf;
      acc = compose_letter(*acc, l);
    } else {
      ProjMap sub = evaluate(eff);
      acc = acc ? compose(*acc, sub) : sub;
    }
    check_degree(*acc, opts_);
  };
  // Visit the effective parts first to last for a left fold, last to first for a right fold.
  const bool reversed = w.inverted_ != from_right;
  if (reversed) {
    for (auto it = node.parts.rbegin(); it != node.parts.rend(); ++it) step(*it);
  } else {
    for (const auto& p : node.parts) step(p);
  }
  return *acc;
}

}  // namespace cremona
