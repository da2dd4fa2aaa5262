#include <doctest.h>

#include "cremona/affine.hpp"
#include "cremona/builtins.hpp"
#include "cremona/gnword.hpp"
#include "cremona/ratfunc.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

namespace {

RatFunc R(const char* num, const char* den, std::size_t nv) { return RatFunc(P(num, nv), P(den, nv)); }

}  // namespace

TEST_CASE("maps cancel common factors") {
  CHECK(M("[x0*x1*x2*x0:x0*x1*x2*x1:x0*x1*x2*x2]") == ProjMap::identity(Q, 2));
  ProjMap s = M("[x1*x2:x0*x2:x0*x1]");
  CHECK(format_map(s) == "[x1*x2:x0*x2:x0*x1]");
  CHECK(s.degree() == 2);
  CHECK_THROWS_AS(ProjMap::make({P("x0", 2), P("x1^2", 2)}), std::invalid_argument);
  CHECK_THROWS_AS(ProjMap::make({MultiPoly(Q, 2), MultiPoly(Q, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(ProjMap::make({P("x0+x1^2", 2), P("x1", 2)}), std::invalid_argument);
  CHECK(M("[2*x0:4*x1]") == M("[x0:2*x1]"));
}

TEST_CASE("composition") {
  for (std::size_t n = 2; n <= 4; ++n) {
    ProjMap s = sigma_map(Q, n);
    CHECK(compose(s, s) == ProjMap::identity(Q, n));
  }
  CHECK(compose(M("[x0:x1]"), M("[x1:x0]")) == M("[x1:x0]"));
  CHECK(compose(M("[x1:x0]"), M("[x1:x0]")) == ProjMap::identity(Q, 1));

  auto c = compose_with_factor(sigma_map(Q, 2), sigma_map(Q, 2));
  CHECK(c.factor == P("x0*x1*x2", 3));
}

TEST_CASE("theta from alpha1 and sigma") {
  for (std::size_t n = 2; n <= 4; ++n) {
    GnWord w{n, Q, {}};
    GnLetter a = builtin("alpha1", n).word->flatten(n, Q).letters.at(0);
    for (int k = 0; k < 5; ++k) w.letters.push_back(k % 2 ? GnLetter::make_sigma() : a);
    CHECK(equal_up_to_scalar(eval_word(w), builtin("theta", n).map));
  }
  CHECK(builtin("theta", 2).map == M("[x0*x1:x0^2:x2*x1]"));
}

TEST_CASE("degrees of g and its inverse") {
  ProjMap g = builtin("g", 3).map;
  ProjMap gi = builtin("g-inverse", 3).map;
  CHECK(sigma_map(Q, 3).degree() == 3);
  CHECK(g.degree() == 4);
  CHECK(gi.degree() == 3);
  CHECK(compose(g, gi) == ProjMap::identity(Q, 3));
  CHECK(ProjMap::identity(Q, 3).degree() == 1);
  ProjMap direct = from_fractions({R("x0", "1", 4), R("x0*x1", "x0+x1", 4),
                                   R("x0*x1*x2", "x0*x1+x0*x2+x1*x2", 4), R("x3", "1", 4)});
  CHECK(equal_up_to_scalar(g, direct));
}

TEST_CASE("Jacobians") {
  CHECK(jacobian(M("[x1*x2:x0*x2:x0*x1]")) == P("2*x0*x1*x2", 3));
  for (std::size_t n = 2; n <= 4; ++n) {
    MultiPoly expected = MultiPoly::monomial(Q, n + 1, Exponents::unit(0, 2) + Exponents::unit(1, n - 1), Coeff(Q, -2L));
    CHECK(jacobian(builtin("theta", n).map) == expected);
  }
  CHECK(jacobian(ProjMap::identity(Q, 3)).is_one());
  ProjMap q = builtin("quadric-family", 3, Q, {{"p1", "x1+x3"}, {"p2", "x2*x3-x1^2"}}).map;
  CHECK(jacobian(q) == P("-2*x2*x3*x0^2+2*x1^2*x0^2", 4));
}

TEST_CASE("affine charts") {
  for (std::size_t n = 2; n <= 3; ++n) {
    AffMap a = to_affine(sigma_map(Q, n));
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(a.components[i - 1].num().is_one());
      CHECK(a.components[i - 1].den() == MultiPoly::variable(Q, n + 1, i));
    }
    CHECK(from_affine(a) == sigma_map(Q, n));
  }
  AffMap xi = to_affine(builtin("xi", 3).map);
  CHECK(xi.components[0] == R("x1", "1", 4));
  CHECK(xi.components[1] == R("x1*x2", "1", 4));
  CHECK(xi.components[2] == R("x3", "1", 4));
}

TEST_CASE("affine Jacobians") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)})
    for (std::size_t n = 2; n <= 3; ++n) {
      MultiPoly den = MultiPoly::constant(f, n + 1, 1);
      for (std::size_t i = 1; i <= n; ++i) den *= MultiPoly::variable(f, n + 1, i);
      RatFunc expected(MultiPoly::constant(f, n + 1, n % 2 ? -1 : 1), den * den);
      CHECK(affine_jacobian(to_affine(sigma_map(f, n))) == expected);
    }
  CHECK(affine_jacobian(to_affine(ProjMap::identity(Q, 3))) == R("1", "1", 4));
  CHECK(affine_jacobian(to_affine(M("[x0^2:x1*x0+x2^2:x2*x0]"))) == R("1", "1", 3));
}

TEST_CASE("linear embedding") {
  CHECK(linear_embed(ProjMap::identity(Q, 2)) == ProjMap::identity(Q, 3));
  ProjMap swap = M("[x1:x0:x2]");
  CHECK(equal_up_to_scalar(linear_embed(swap), M("[x1*x0:x0*x0:x2*x0:x3*x1]")));
  CHECK(linear_embed(sigma_map(Q, 2)).dim() == 3);
}

TEST_CASE("equality up to scalar and linearity") {
  ProjMap f = M("[x1*x2:x0*x2:x0*x1]");
  CHECK(equal_up_to_scalar(f, ProjMap::make({P("5*x1*x2", 3), P("5*x0*x2", 3), P("5*x0*x1", 3)})));
  CHECK_FALSE(equal_up_to_scalar(sigma_map(Q, 2), ProjMap::identity(Q, 2)));
  CHECK(is_linear(M("[x1+x0:x0:x2]")));
  CHECK_FALSE(is_linear(sigma_map(Q, 2)));

  ProjMap tau = builtin("tau", 3).map;
  ProjMap comm = builtin("commutator", 3).map;
  ProjMap t = M("[x0:x1:x3-2*x2:x3]");
  ProjMap t_inv = M("[x0:x1:1/2*x3-1/2*x2:x3]");
  ProjMap conj = compose(t, compose(comm, t_inv));
  CHECK(equal_up_to_scalar(conj, tau));
  CHECK(is_linear(compose(M("[x0^2:x1*x0-x2*x3:x2*x0:x3*x0]"), conj)));
}
