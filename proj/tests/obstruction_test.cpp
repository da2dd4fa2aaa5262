#include <doctest.h>

#include "cremona/builtins.hpp"
#include "cremona/errors.hpp"
#include "cremona/gnword.hpp"
#include "cremona/obstruction.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

TEST_CASE("k-th power test") {
  auto sq = kth_power_test(jacobian(sigma_map(Q, 3)), 2);
  CHECK(sq.holds);
  REQUIRE(sq.root);
  CHECK(*sq.root == P("x0*x1*x2*x3", 4));

  auto cube = kth_power_test(P("2*x0*x1*x2", 3), 3);
  CHECK_FALSE(cube.holds);
  REQUIRE(cube.witness);
  CHECK(cube.witness->multiplicity == 1);

  auto c = kth_power_test(P("5", 3), 4);
  CHECK(c.holds);
  CHECK(c.root->is_one());

  auto cubic = kth_power_test(P("x0+x1", 2).pow(3), 3);
  CHECK(cubic.holds);
  CHECK(*cubic.root == P("x0+x1", 2));

  CHECK_THROWS_AS(kth_power_test(P("x0^2", 2, Field::prime(5)), 2), UnsupportedCharacteristic);
}

TEST_CASE("obstruction for odd dimension") {
  auto q = gn_obstruction(builtin("quadratic-involution", 3).map);
  CHECK(q.verdict == Verdict::Obstructed);
  REQUIRE(q.witness_factor);
  CHECK(*q.witness_factor == P("x1*x2", 4));
  CHECK(*q.witness_multiplicity == 1);
  CHECK(q.jacobian == P("-2*x0^2*x1*x2", 4));

  auto xi = gn_obstruction(builtin("xi", 3).map);
  CHECK(xi.verdict == Verdict::Obstructed);
  CHECK(*xi.witness_multiplicity % 2 == 1);

  auto s = gn_obstruction(sigma_map(Q, 3));
  CHECK(s.verdict == Verdict::NoObstruction);
}

TEST_CASE("obstruction is inapplicable in even dimension and positive characteristic") {
  CHECK(gn_obstruction(builtin("xi", 4).map).verdict == Verdict::Inapplicable);
  CHECK(gn_obstruction(sigma_map(Field::prime(3), 3)).verdict == Verdict::Inapplicable);
}

TEST_CASE("discrepancy") {
  for (std::size_t n = 3; n <= 4; ++n) CHECK(discrepancy(builtin("xi", n).map, MultiPoly::variable(Q, n + 1, 1)) == 1);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i = 0; i <= n; ++i) CHECK(discrepancy(sigma_map(Q, n), MultiPoly::variable(Q, n + 1, i)) == n - 1);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{4, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    ProjMap phi = builtin("phi-m", n, Q, {{"m", std::to_string(m)}}).map;
    CHECK(discrepancy(phi, MultiPoly::variable(Q, n + 1, 1)) == m - 1);
  }
  CHECK_THROWS(discrepancy(sigma_map(Q, 2), P("3", 3)));
}

TEST_CASE("contracted report") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto d = contracted_report(builtin("theta", n).map);
    CHECK(d.unit == Coeff(Q, -2L));
    if (n == 3) {
      REQUIRE(d.factors.size() == 1);
      CHECK(d.factors[0].poly == P("x0*x1", 4));
      CHECK(d.factors[0].multiplicity == 2);
    }
    CHECK(d.expand(Q, n + 1) == jacobian(builtin("theta", n).map));
  }
  CHECK(contracted_report(ProjMap::identity(Q, 3)).factors.empty());
  ProjMap g = builtin("g", 3).map;
  CHECK(contracted_report(g).expand(Q, 4) == jacobian(g));
}

TEST_CASE("Jacobians of generated maps are squares up to scalar") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int t = 0; t < 10; ++t) {
    GnWord w{3, Q, {}};
    for (int k = 0; k < 4; ++k) {
      if (k % 2) {
        w.letters.push_back(GnLetter::make_sigma());
        continue;
      }
      CoeffMatrix m(4, std::vector<Coeff>(4, Coeff(Q, 0L)));
      for (std::size_t i = 0; i < 4; ++i) {
        m[i][i] = Coeff(Q, 1L);
        for (std::size_t j = 0; j < i; ++j) m[i][j] = Coeff(Q, entry(rng));
      }
      w.letters.push_back(GnLetter::make_linear(m));
    }
    ProjMap f = eval_word(w);
    CHECK(kth_power_test(jacobian(f), 2).holds);
    CHECK(gn_obstruction(f).verdict == Verdict::NoObstruction);
  }
}
