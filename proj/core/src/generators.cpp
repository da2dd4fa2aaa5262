#include "cremona/generators.hpp"

#include <stdexcept>

#include "cremona/errors.hpp"

namespace cremona {

GeneratorWords::GeneratorWords(std::size_t n, Field f) : n_(n), field_(f), odd_char_(f.characteristic() != 2) {
  if (n < 1 || n + 1 > kMaxVars) throw std::invalid_argument("dimension out of range");
  sigma_ = WordExpr::sigma();
  alpha1_ = with_entries({{1, 0, 1}, {1, 1, -1}});
  theta_ = WordExpr::concat({alpha1_, sigma_, alpha1_, sigma_, alpha1_});
  phi5_ = relabel(swap(0, 1)) * theta_;
  if (!odd_char_ || n < 2) return;

  auto flip = [&](std::size_t i) {
    std::vector<Coeff> d(n + 1, Coeff(f, 1));
    d[i] = Coeff(f, -1);
    return diagonal(d);
  };
  WordExpr n1 = flip(1), n2 = flip(2);
  WordExpr alpha2 = with_entries({{2, 1, 1}, {2, 2, -1}});
  theta_alpha2_ = WordExpr::concat({theta_, alpha2, theta_});
  Permutation rho = Permutation::identity(n + 1);
  rho.image[0] = 2;
  rho.image[1] = 0;
  rho.image[2] = 1;
  tau_prime_ = conjugate(rho, theta_alpha2_ * n2);
  if (n < 3) return;

  WordExpr a = with_entries({{2, 3, 1}});
  commutator_ = WordExpr::concat({a, tau_prime_, a.inverse(), tau_prime_.inverse()});
  WordExpr t = with_entries({{2, 2, -2}, {2, 3, 1}});
  tau_ = WordExpr::concat({t, commutator_, t.inverse()});
  tau1_ = conjugate(swap(0, 3), tau_) * n1;
  tau2_ = conjugate(swap(1, 2), tau_) * n2;
  tau2_prime_ = a * tau2_;
  tau3_ = conjugate(swap(0, 2), tau_);
  alpha43_ = with_entries({{2, 2, -1}, {2, 3, 1}});
  chi0_ = WordExpr::concat({sigma_, alpha43_, sigma_, tau2_prime_, sigma_, tau1_, theta_});
  chi1_ = WordExpr::concat({sigma_, tau3_, alpha43_, chi0_, tau3_});
  chi_ = n2 * chi1_;

  Permutation r1 = Permutation::identity(n + 1);
  r1.image[0] = 1;
  r1.image[1] = 2;
  r1.image[2] = 0;
  phi1_ = conjugate(r1, theta_);
  phi2_ = conjugate(swap(0, 1), theta_);
  phi3_ = conjugate(swap(1, 2), theta_);
  phi4_ = conjugate(swap(0, 3), theta_);
  mu_ = WordExpr::concat({phi2_, phi3_, phi2_, phi1_});
  mu_chi_phi4_ = WordExpr::concat({mu_, chi_, phi4_});
  WordExpr theta3 = conjugate(swap(1, 3), theta_);
  WordExpr p13 = relabel(swap(1, 3));
  nu_ = WordExpr::concat({p13, relabel(swap(1, 2)), theta3, mu_chi_phi4_, theta3, p13});
  if (n % 2 == 0) {
    WordExpr p = relabel(swap(2, n));
    xi_ = WordExpr::concat({p, phi5_, psi(n / 2).inverse(), p});
  }
}

void GeneratorWords::require(bool ok, const char* what) const {
  if (!odd_char_) throw UnsupportedCharacteristic(std::string(what) + " needs a field of characteristic other than 2");
  if (!ok) throw std::invalid_argument(std::string(what) + " is not defined in dimension " + std::to_string(n_));
}

WordExpr GeneratorWords::linear(const std::vector<std::vector<long>>& m) const {
  CoeffMatrix c;
  for (const auto& row : m) {
    std::vector<Coeff> r;
    for (long v : row) r.emplace_back(field_, v);
    c.push_back(std::move(r));
  }
  return WordExpr::linear(std::move(c));
}

WordExpr GeneratorWords::with_entries(std::initializer_list<Entry> entries) const {
  CoeffMatrix m(n_ + 1, std::vector<Coeff>(n_ + 1, Coeff(field_)));
  for (std::size_t k = 0; k <= n_; ++k) m[k][k] = Coeff(field_, 1);
  for (const auto& e : entries) m[e.row][e.col] = Coeff(field_, e.value);
  return WordExpr::linear(std::move(m));
}

WordExpr GeneratorWords::shear(std::size_t i, std::size_t j, const Coeff& c) const {
  CoeffMatrix m(n_ + 1, std::vector<Coeff>(n_ + 1, Coeff(field_)));
  for (std::size_t k = 0; k <= n_; ++k) m[k][k] = Coeff(field_, 1);
  m[i][j] += c;
  return WordExpr::linear(std::move(m));
}

WordExpr GeneratorWords::diagonal(const std::vector<Coeff>& d) const {
  CoeffMatrix m(n_ + 1, std::vector<Coeff>(n_ + 1, Coeff(field_)));
  for (std::size_t k = 0; k <= n_; ++k) m[k][k] = d.at(k);
  return WordExpr::linear(std::move(m));
}

WordExpr GeneratorWords::relabel(const Permutation& rho) const {
  if (rho.is_identity()) return WordExpr{};
  return WordExpr::letter(permutation_letter(field_, rho));
}

WordExpr GeneratorWords::conjugate(const Permutation& rho, const WordExpr& w) const {
  if (rho.is_identity()) return w;
  WordExpr r = relabel(rho);
  return WordExpr::concat({r, w, r.inverse()});
}

Permutation GeneratorWords::swap(std::size_t a, std::size_t b) const { return Permutation::transposition(n_ + 1, a, b); }

const WordExpr& GeneratorWords::theta_alpha2() const {
  require(n_ >= 2, "theta alpha2 theta");
  return theta_alpha2_;
}
const WordExpr& GeneratorWords::tau_prime() const {
  require(n_ >= 2, "tau'");
  return tau_prime_;
}
const WordExpr& GeneratorWords::commutator() const {
  require(n_ >= 3, "commutator");
  return commutator_;
}
const WordExpr& GeneratorWords::tau() const {
  require(n_ >= 3, "tau");
  return tau_;
}
const WordExpr& GeneratorWords::tau1() const {
  require(n_ >= 3, "tau1");
  return tau1_;
}
const WordExpr& GeneratorWords::tau2() const {
  require(n_ >= 3, "tau2");
  return tau2_;
}
const WordExpr& GeneratorWords::tau2_prime() const {
  require(n_ >= 3, "tau2'");
  return tau2_prime_;
}
const WordExpr& GeneratorWords::tau3() const {
  require(n_ >= 3, "tau3");
  return tau3_;
}
const WordExpr& GeneratorWords::alpha43() const {
  require(n_ >= 3, "alpha");
  return alpha43_;
}
const WordExpr& GeneratorWords::chi0() const {
  require(n_ >= 3, "chi0");
  return chi0_;
}
const WordExpr& GeneratorWords::chi1() const {
  require(n_ >= 3, "chi1");
  return chi1_;
}
const WordExpr& GeneratorWords::chi() const {
  require(n_ >= 3, "chi");
  return chi_;
}
const WordExpr& GeneratorWords::phi1() const {
  require(n_ >= 3, "phi1");
  return phi1_;
}
const WordExpr& GeneratorWords::phi2() const {
  require(n_ >= 3, "phi2");
  return phi2_;
}
const WordExpr& GeneratorWords::phi3() const {
  require(n_ >= 3, "phi3");
  return phi3_;
}
const WordExpr& GeneratorWords::phi4() const {
  require(n_ >= 3, "phi4");
  return phi4_;
}
const WordExpr& GeneratorWords::mu() const {
  require(n_ >= 3, "mu");
  return mu_;
}
const WordExpr& GeneratorWords::mu_chi_phi4() const {
  require(n_ >= 3, "mu chi phi4");
  return mu_chi_phi4_;
}
const WordExpr& GeneratorWords::nu() const {
  require(n_ >= 3, "nu");
  return nu_;
}

WordExpr GeneratorWords::psi(std::size_t k) const {
  if (k == 1) return WordExpr{};
  require(n_ >= 3 && 2 * k - 1 <= n_, "psi_k");
  std::vector<WordExpr> parts;
  for (std::size_t j = 1; j < k; ++j) {
    Permutation rho = Permutation::identity(n_ + 1);
    if (j > 1) {
      std::swap(rho.image[2], rho.image[2 * j]);
      std::swap(rho.image[3], rho.image[2 * j + 1]);
    }
    parts.push_back(conjugate(rho, nu_));
  }
  return WordExpr::concat(parts);
}

const WordExpr& GeneratorWords::xi() const {
  if (n_ == 2) return phi5_;
  require(n_ % 2 == 0, "xi word");
  return xi_;
}

}  // namespace cremona
