#include "cremona/affine.hpp"

#include <stdexcept>

#include "cremona/gcd.hpp"
#include "determinant.hpp"

namespace cremona {

AffMap to_affine(const ProjMap& f) {
  if (f[0].is_zero()) throw std::invalid_argument("first component vanishes; no affine chart");
  const Field k = f.field();
  const Coeff one(k, 1);
  MultiPoly d = f[0].evaluate_at(0, one);
  if (d.is_zero()) throw std::invalid_argument("first component vanishes on the chart x0 = 1");
  AffMap g;
  g.n = f.dim();
  for (std::size_t i = 1; i < f.components().size(); ++i)
    g.components.emplace_back(f[i].evaluate_at(0, one), d);
  return g;
}

ProjMap from_affine(const AffMap& g) {
  if (g.components.size() != g.n || g.n == 0) throw std::invalid_argument("affine map has wrong arity");
  const MultiPoly& first = g.components.front().den();
  MultiPoly common = MultiPoly::constant(first.field(), first.num_vars(), 1);
  for (const auto& c : g.components) common = lcm(common, c.den());
  std::vector<MultiPoly> comps{common};
  for (const auto& c : g.components) comps.push_back(c.num() * *divide_exact(common, c.den()));
  int degree = 0;
  for (const auto& c : comps) degree = std::max(degree, c.total_degree());
  for (auto& c : comps) c = c.homogenize(0, static_cast<std::uint32_t>(degree));
  return ProjMap::make(std::move(comps));
}

ProjMap from_fractions(const std::vector<RatFunc>& comps) {
  if (comps.size() < 2) throw std::invalid_argument("a map of P^n needs at least two components");
  const MultiPoly& first = comps.front().den();
  MultiPoly common = MultiPoly::constant(first.field(), first.num_vars(), 1);
  for (const auto& c : comps) common = lcm(common, c.den());
  std::vector<MultiPoly> out;
  for (const auto& c : comps) out.push_back(c.num() * *divide_exact(common, c.den()));
  return ProjMap::make(std::move(out));
}

RatFunc rational_jacobian(const std::vector<RatFunc>& fs, const std::vector<std::size_t>& vars) {
  if (fs.size() != vars.size() || fs.empty()) throw std::invalid_argument("jacobian needs a square system");
  const Field k = fs[0].num().field();
  const std::size_t nv = fs[0].num().num_vars();
  std::vector<std::vector<MultiPoly>> m(fs.size());
  MultiPoly denominator = MultiPoly::constant(k, nv, 1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const MultiPoly& p = fs[i].num();
    const MultiPoly& q = fs[i].den();
    const bool poly = q.is_one();
    for (std::size_t v : vars)
      m[i].push_back(poly ? p.derivative(v) : p.derivative(v) * q - p * q.derivative(v));
    if (!poly) denominator *= q * q;
  }
  MultiPoly det = detail::laplace_det(m, MultiPoly(k, nv));
  return RatFunc(det, denominator);
}

RatFunc affine_jacobian(const AffMap& g) {
  std::vector<std::size_t> vars;
  for (std::size_t j = 1; j <= g.n; ++j) vars.push_back(j);
  return rational_jacobian(g.components, vars);
}

ProjMap linear_embed(const ProjMap& f) {
  AffMap g = to_affine(f);
  const std::size_t nv = f.dim() + 2;
  AffMap lifted;
  lifted.n = f.dim() + 1;
  for (const auto& c : g.components) lifted.components.push_back(c.with_num_vars(nv));
  lifted.components.push_back(RatFunc::from_poly(MultiPoly::variable(f.field(), nv, nv - 1)));
  return from_affine(lifted);
}

}  // namespace cremona
