#include "cremona/builtins.hpp"

#include <functional>
#include <stdexcept>

#include "cremona/affine.hpp"
#include "cremona/polytext.hpp"

namespace cremona {

namespace {

long int_param(const BuiltinParams& params, const std::string& key, std::optional<long> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw std::invalid_argument("missing parameter " + key);
  }
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter " + key + " must be an integer");
  }
}

class Forms {
 public:
  Forms(std::size_t n, Field f) : n_(n), f_(f) {}
  RatFunc x(std::size_t i) const { return RatFunc::from_poly(MultiPoly::variable(f_, n_ + 1, i)); }
  RatFunc c(long v) const { return RatFunc::from_poly(MultiPoly::constant(f_, n_ + 1, v)); }
  RatFunc poly(const MultiPoly& p) const { return RatFunc::from_poly(p); }
  // comps followed by x_k for k = comps.size() .. n, each multiplied by scale.
  ProjMap map(std::vector<RatFunc> comps, std::optional<RatFunc> scale = std::nullopt) const {
    for (std::size_t k = comps.size(); k <= n_; ++k) comps.push_back(scale ? x(k) * *scale : x(k));
    return from_fractions(comps);
  }
  std::size_t n() const { return n_; }
  Field field() const { return f_; }

 private:
  std::size_t n_;
  Field f_;
};

using Maker = std::function<Builtin(const Forms&, Certifier&, const BuiltinParams&)>;

struct Entry {
  BuiltinInfo info;
  Maker make;
};

Builtin with_word(ProjMap m, WordExpr w) { return Builtin{"", 0, std::move(m), std::move(w)}; }
Builtin without_word(ProjMap m) { return Builtin{"", 0, std::move(m), std::nullopt}; }

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> t;
    auto add = [&](std::string name, std::string summary, std::size_t min_n, Maker m) {
      t.push_back(Entry{BuiltinInfo{std::move(name), std::move(summary), min_n}, std::move(m)});
    };
    add("identity", "[x0 : ... : xn]", 1, [](const Forms& F, Certifier&, const BuiltinParams&) {
      return with_word(F.map({}), WordExpr{});
    });
    add("sigma", "standard involution [1/x0 : ... : 1/xn]", 1, [](const Forms& F, Certifier&, const BuiltinParams&) {
      std::vector<RatFunc> comps;
      for (std::size_t i = 0; i <= F.n(); ++i) comps.push_back(F.c(1) / F.x(i));
      return with_word(F.map(comps), WordExpr::sigma());
    });
    add("alpha1", "[x0 : x0 - x1 : x2 : ...]", 1, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(0) - F.x(1)}), C.generators().alpha1());
    });
    add("theta", "[x0 : x0^2/x1 : x2 : ...]", 1, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(0) * F.x(0) / F.x(1)}), C.generators().theta());
    });
    add("theta-alpha2-theta", "[x0 : x1 : x0^2/x1 - x2 : x3 : ...]", 2,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          return with_word(F.map({F.x(0), F.x(1), F.x(0) * F.x(0) / F.x(1) - F.x(2)}), C.generators().theta_alpha2());
        });
    add("tau-prime", "[x0 : x1 + x2^2/x0 : x2 : ...]", 2, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1) + F.x(2) * F.x(2) / F.x(0)}), C.generators().tau_prime());
    });
    add("commutator", "[x0 : x1 + x3(x3 - 2x2)/x0 : x2 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          return with_word(F.map({F.x(0), F.x(1) + F.x(3) * (F.x(3) - F.c(2) * F.x(2)) / F.x(0)}),
                           C.generators().commutator());
        });
    add("tau", "[x0 : x1 + x2 x3/x0 : x2 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1) + F.x(2) * F.x(3) / F.x(0)}), C.generators().tau());
    });
    add("tau1", "[x0 : -x1 + x0 x2/x3 : x2 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), -F.x(1) + F.x(0) * F.x(2) / F.x(3)}), C.generators().tau1());
    });
    add("tau2", "[x0 : x1 : -x2 + x1 x3/x0 : x3 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1), -F.x(2) + F.x(1) * F.x(3) / F.x(0)}), C.generators().tau2());
    });
    add("tau2-prime", "[x0 : x1 : x3 - x2 + x1 x3/x0 : x3 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          return with_word(F.map({F.x(0), F.x(1), F.x(3) - F.x(2) + F.x(1) * F.x(3) / F.x(0)}),
                           C.generators().tau2_prime());
        });
    add("tau3", "[x0 : x1 + x0 x3/x2 : x2 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1) + F.x(0) * F.x(3) / F.x(2)}), C.generators().tau3());
    });
    add("alpha", "[x0 : x1 : x3 - x2 : x3 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1), F.x(3) - F.x(2)}), C.generators().alpha43());
    });
    add("chi0", "sigma alpha sigma tau2' sigma tau1 theta", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      auto x = [&](std::size_t i) { return F.x(i); };
      std::vector<RatFunc> comps{
          F.c(1) / x(0), x(1) * x(3) / (x(0) * (x(1) * x(2) - x(0) * x(3))),
          (x(1) * x(2) * x(2) + x(0) * x(3) * x(3) - x(0) * x(2) * x(3)) / (x(0) * x(3) * x(3) * x(3))};
      for (std::size_t k = 3; k <= F.n(); ++k) comps.push_back(F.c(1) / x(k));
      return with_word(F.map(comps), C.generators().chi0());
    });
    add("chi1", "[x0 : x0 x2/x3 : -x0 x3^3/(x1 x2^2) : x3 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          auto x = [&](std::size_t i) { return F.x(i); };
          return with_word(
              F.map({x(0), x(0) * x(2) / x(3), -(x(0) * x(3) * x(3) * x(3)) / (x(1) * x(2) * x(2))}),
              C.generators().chi1());
        });
    add("chi", "[x0 : x0 x2/x3 : x0 x3^3/(x1 x2^2) : x3 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          auto x = [&](std::size_t i) { return F.x(i); };
          return with_word(F.map({x(0), x(0) * x(2) / x(3), x(0) * x(3) * x(3) * x(3) / (x(1) * x(2) * x(2))}),
                           C.generators().chi());
        });
    add("phi1", "[x0 : x1 : x1^2/x2 : x3 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1), F.x(1) * F.x(1) / F.x(2)}), C.generators().phi1());
    });
    add("phi2", "[x1^2/x0 : x1 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(1) * F.x(1) / F.x(0)}), C.generators().phi2());
    });
    add("phi3", "[x0 : x1 : x0^2/x2 : x3 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1), F.x(0) * F.x(0) / F.x(2)}), C.generators().phi3());
    });
    add("phi4", "[x0 : x3^2/x1 : x2 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(3) * F.x(3) / F.x(1)}), C.generators().phi4());
    });
    add("phi5", "[x0 : x1 : x2 x1/x0 : ... : xn x1/x0]", 1, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      return with_word(F.map({F.x(0), F.x(1)}, F.x(1) / F.x(0)), C.generators().phi5());
    });
    add("mu", "[x0 : x1 : x2 (x1/x0)^2 : x3 : ...]", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      RatFunc r = F.x(1) / F.x(0);
      return with_word(F.map({F.x(0), F.x(1), F.x(2) * r * r}), C.generators().mu());
    });
    add("mu-chi-phi4", "[x0 : x2 x0/x3 : x1 x0/x3 : x3 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          RatFunc r = F.x(0) / F.x(3);
          return with_word(F.map({F.x(0), F.x(2) * r, F.x(1) * r}), C.generators().mu_chi_phi4());
        });
    add("nu", "[x0 : x1 : x2 x1/x0 : x3 x1/x0 : x4 : ...]", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          RatFunc r = F.x(1) / F.x(0);
          return with_word(F.map({F.x(0), F.x(1), F.x(2) * r, F.x(3) * r}), C.generators().nu());
        });
    add("psi", "x2 .. x_{2k-1} times x1/x0 (params: k)", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams& p) {
          long k = int_param(p, "k");
          if (k < 2 || static_cast<std::size_t>(2 * k - 1) > F.n())
            throw std::invalid_argument("psi needs 3 <= 2k - 1 <= n");
          RatFunc r = F.x(1) / F.x(0);
          std::vector<RatFunc> comps{F.x(0), F.x(1)};
          for (long i = 2; i <= 2 * k - 1; ++i) comps.push_back(F.x(i) * r);
          return with_word(F.map(comps), C.generators().psi(static_cast<std::size_t>(k)));
        });
    add("xi", "[x0 : x1 : x2 x1/x0 : x3 : ...]; word for even n only", 2,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          ProjMap m = F.map({F.x(0), F.x(1), F.x(2) * F.x(1) / F.x(0)});
          if (F.n() % 2 == 1) return without_word(std::move(m));
          return with_word(std::move(m), C.generators().xi());
        });
    add("phi-m", "x2 .. xm times x1/x0 (params: m, n > m >= 2)", 3,
        [](const Forms& F, Certifier&, const BuiltinParams& p) {
          long m = int_param(p, "m");
          if (m < 2 || static_cast<std::size_t>(m) >= F.n()) throw std::invalid_argument("phi-m needs n > m >= 2");
          RatFunc r = F.x(1) / F.x(0);
          std::vector<RatFunc> comps{F.x(0), F.x(1)};
          for (long i = 2; i <= m; ++i) comps.push_back(F.x(i) * r);
          return without_word(F.map(comps));
        });
    add("quadratic-involution", "[x1 x2 : x0 x1 : ... : x0 xn]", 2,
        [](const Forms& F, Certifier&, const BuiltinParams&) {
          std::vector<RatFunc> comps{F.x(1) * F.x(2)};
          for (std::size_t k = 1; k <= F.n(); ++k) comps.push_back(F.x(0) * F.x(k));
          return without_word(F.map(comps));
        });
    add("quadric-family", "[x0 P1 + P2 : x0 x1 : ... : x0 xn] (params: p1, p2; default x1, x2*x3)", 3,
        [](const Forms& F, Certifier&, const BuiltinParams& p) {
          auto read = [&](const char* key, const char* fallback, int degree) {
            auto it = p.find(key);
            MultiPoly q = parse_poly(it == p.end() ? fallback : it->second, F.field(), F.n() + 1);
            if (q.depends_on(0) || !q.is_homogeneous() || q.total_degree() != degree)
              throw std::invalid_argument(std::string(key) + " must be homogeneous of degree " +
                                          std::to_string(degree) + " in x1..xn");
            return F.poly(q);
          };
          RatFunc p1 = read("p1", "x1", 1), p2 = read("p2", "x2*x3", 2);
          std::vector<RatFunc> comps{F.x(0) * p1 + p2};
          for (std::size_t k = 1; k <= F.n(); ++k) comps.push_back(F.x(0) * F.x(k));
          return without_word(F.map(comps));
        });
    add("kantor-psi", "[x1 : x0 : x2 x1^2/x0^2 : x3 x1/x0]; n = 3", 3,
        [](const Forms& F, Certifier&, const BuiltinParams&) {
          if (F.n() != 3) throw std::invalid_argument("kantor-psi is defined for n = 3");
          RatFunc r = F.x(1) / F.x(0);
          return without_word(F.map({F.x(1), F.x(0), F.x(2) * r * r, F.x(3) * r}));
        });
    add("alpha-sum", "[x0 : x1 + x0 : x2 + x1 + x0 : x3 : ...]", 2,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          const GeneratorWords& g = C.generators();
          return with_word(F.map({F.x(0), F.x(1) + F.x(0), F.x(2) + F.x(1) + F.x(0)}),
                           g.with_entries({{1, 0, 1}, {2, 0, 1}, {2, 1, 1}}));
        });
    add("g", "sigma alpha-sum sigma, degree 4 for n >= 3", 2, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      auto x = [&](std::size_t i) { return F.x(i); };
      const GeneratorWords& g = C.generators();
      WordExpr a = g.with_entries({{1, 0, 1}, {2, 0, 1}, {2, 1, 1}});
      return with_word(F.map({x(0), x(0) * x(1) / (x(0) + x(1)),
                              x(0) * x(1) * x(2) / (x(0) * x(1) + x(0) * x(2) + x(1) * x(2))}),
                       WordExpr::concat({g.sigma(), a, g.sigma()}));
    });
    add("g-inverse", "sigma alpha-sum^{-1} sigma, degree 3", 2,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          auto x = [&](std::size_t i) { return F.x(i); };
          const GeneratorWords& g = C.generators();
          WordExpr a = g.with_entries({{1, 0, 1}, {2, 0, 1}, {2, 1, 1}});
          return with_word(F.map({x(0), x(0) * x(1) / (x(0) - x(1)), x(1) * x(2) / (x(1) - x(2))}),
                           WordExpr::concat({g.sigma(), a.inverse(), g.sigma()}));
        });
    add("dolgachev", "[x1x2 : x0x2 : x0x1 : x0x3 : x1x4 : x2x5]; n = 5", 5,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          if (F.n() != 5) throw std::invalid_argument("dolgachev is defined for n = 5");
          auto x = [&](std::size_t i) { return F.x(i); };
          ProjMap m = F.map({x(1) * x(2), x(0) * x(2), x(0) * x(1), x(0) * x(3), x(1) * x(4), x(2) * x(5)});
          IntMatrix a{{-1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {-1, -1, 1, 0, 0}, {0, -1, 0, 1, 0}, {-1, 0, 0, 0, 1}};
          return with_word(std::move(m), C.monomial_word(a));
        });
    add("nagata-alpha", "[w : x + y^2/z : y : z]; n = 3", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      if (F.n() != 3) throw std::invalid_argument("nagata-alpha is defined for n = 3");
      const GeneratorWords& g = C.generators();
      return with_word(F.map({F.x(0), F.x(1) + F.x(2) * F.x(2) / F.x(3)}), g.conjugate(g.swap(0, 3), g.tau_prime()));
    });
    add("nagata-beta", "[w : x : y + x z^2/w^2 : z]; n = 3", 3, [](const Forms& F, Certifier& C, const BuiltinParams&) {
      if (F.n() != 3) throw std::invalid_argument("nagata-beta is defined for n = 3");
      const GeneratorWords& g = C.generators();
      return with_word(F.map({F.x(0), F.x(1), F.x(2) + F.x(1) * F.x(3) * F.x(3) / (F.x(0) * F.x(0))}),
                       g.conjugate(g.swap(1, 2), C.tame_elementary_word({1, 2}, Coeff(F.field(), 1))));
    });
    add("nagata", "Nagata automorphism of A^3 extended to P^3", 3,
        [](const Forms& F, Certifier& C, const BuiltinParams&) {
          if (F.n() != 3) throw std::invalid_argument("nagata is defined for n = 3");
          const GeneratorWords& g = C.generators();
          WordExpr alpha = g.conjugate(g.swap(0, 3), g.tau_prime());
          WordExpr beta = g.conjugate(g.swap(1, 2), C.tame_elementary_word({1, 2}, Coeff(F.field(), 1)));
          return with_word(nagata_map(F.field()), WordExpr::concat({alpha, beta, alpha.inverse()}));
        });
    return t;
  }();
  return entries;
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog = [] {
    std::vector<BuiltinInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

Builtin builtin(const std::string& name, Certifier& cert, const BuiltinParams& params) {
  for (const auto& e : table()) {
    if (e.info.name != name) continue;
    if (cert.dim() < e.info.min_n)
      throw std::invalid_argument(name + " needs n >= " + std::to_string(e.info.min_n));
    Builtin b = e.make(Forms(cert.dim(), cert.field()), cert, params);
    b.name = name;
    b.n = cert.dim();
    return b;
  }
  throw std::invalid_argument("unknown builtin " + name);
}

Builtin builtin(const std::string& name, std::size_t n, Field f, const BuiltinParams& params) {
  Certifier cert(n, f);
  return builtin(name, cert, params);
}

}  // namespace cremona
