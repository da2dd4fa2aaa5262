#include <doctest.h>

#include <random>

#include "cremona/errors.hpp"
#include "cremona/gcd.hpp"
#include "cremona/projmap.hpp"
#include "cremona/squarefree.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

TEST_CASE("coefficients stay canonical") {
  Coeff a(Q, mpq_class(6, -4));
  CHECK(a.rational() == mpq_class(-3, 2));
  CHECK(a.rational().get_den() == 2);
  Field f7 = Field::prime(7);
  CHECK(Coeff(f7, -1L).residue() == 6);
  CHECK((Coeff(f7, 3L) * Coeff(f7, 5L)).residue() == 1);
  CHECK(Coeff(f7, 3L).inverse().residue() == 5);
  CHECK(f7.characteristic() == 7);
  CHECK(Q.characteristic() == 0);
  CHECK(Field::parse("fp:7") == f7);
  CHECK(Field::parse("F7") == f7);
  CHECK_THROWS(Field::prime(8));
  CHECK_THROWS_AS(Coeff(Q, 1L) / Coeff(Q, 0L), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(P("x0+x1", 2) * P("x0-x1", 2) == P("x0^2-x1^2", 2));
  CHECK((P("x0+x1", 2) * MultiPoly(Q, 2)).is_zero());
  CHECK(P("x0+x1", 2).pow(2) == P("x0^2+2*x0*x1+x1^2", 2));
  CHECK((P("x0+x1", 2) - P("x0+x1", 2)).terms().empty());
  CHECK(format_poly(P("7 - 3/2*x0*x1 + x0^2", 2)) == "x0^2-3/2*x0*x1+7");
  CHECK_THROWS_AS(parse_poly("x0 + y1", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("x0^", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x0", Q), ParseError);
}

TEST_CASE("derivatives") {
  CHECK(P("x0^2*x1", 2).derivative(0) == P("2*x0*x1", 2));
  CHECK(P("x1^3", 2).derivative(0).is_zero());
  Field f2 = Field::prime(2);
  CHECK(P("x0^2", 1, f2).derivative(0).is_zero());
}

TEST_CASE("exact division") {
  CHECK(*divide_exact(P("x0^2-x1^2", 2), P("x0-x1", 2)) == P("x0+x1", 2));
  CHECK_FALSE(divide_exact(P("x0", 2), P("x1", 2)));
  CHECK(*divide_exact(P("x0^3+x1", 2), P("1", 2)) == P("x0^3+x1", 2));
  CHECK_THROWS(divide_exact(P("x0", 2), MultiPoly(Q, 2)));
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x0*x1", 3), P("x0*x2", 3)) == P("x0", 3));
  MultiPoly g = gcd(gcd(P("x0^2*x1*x2", 3), P("x0*x1^2*x2", 3)), P("x0*x1*x2^2", 3));
  CHECK(g == P("x0*x1*x2", 3));
  MultiPoly p = P("-6*x0^2+4*x1", 2);
  CHECK(gcd(p, p) == P("3*x0^2-2*x1", 2));
  CHECK(gcd(MultiPoly(Q, 2), p) == normalized(p));
  Field f5 = Field::prime(5);
  CHECK(gcd(P("2*x0^2-2*x1^2", 2, f5), P("3*x0+3*x1", 2, f5)) == P("x0+x1", 2, f5));
}

TEST_CASE("gcd divides both inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    MultiPoly c = random_poly(rng, 3, 2, 3);
    MultiPoly a = random_poly(rng, 3, 3, 4) * c, b = random_poly(rng, 3, 3, 4) * c;
    if (a.is_zero() || b.is_zero()) continue;
    MultiPoly g = gcd(a, b);
    CHECK(divide_exact(a, g));
    CHECK(divide_exact(b, g));
    if (!c.is_zero()) CHECK(divide_exact(g, c));
  }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(P("x0", 2), P("x0^2*x1", 2)) == 2);
  CHECK(multiplicity(P("x0*x1*x2*x3", 4), jacobian(M("[x1*x2*x3:x0*x2*x3:x0*x1*x3:x0*x1*x2]"))) == 2);
  CHECK(multiplicity(P("x0+x1", 2), P("x0*x1", 2)) == 0);
  CHECK_THROWS_AS(multiplicity(P("3", 2), P("x0", 2)), std::invalid_argument);
}

TEST_CASE("squarefree decomposition") {
  auto d = squarefree_decompose(P("x0^2*x1", 2));
  CHECK(d.unit.is_one());
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].poly == P("x1", 2));
  CHECK(d.factors[0].multiplicity == 1);
  CHECK(d.factors[1].poly == P("x0", 2));
  CHECK(d.factors[1].multiplicity == 2);

  auto s = squarefree_decompose(P("-3*x0^2*x1^2*x2^2*x3^2", 4));
  CHECK(s.unit == Coeff(Q, -3L));
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].poly == P("x0*x1*x2*x3", 4));
  CHECK(s.factors[0].multiplicity == 2);

  auto c = squarefree_decompose(P("7*x0+7*x1", 2) * P("x0+x1", 2).pow(2));
  CHECK(c.unit == Coeff(Q, 7L));
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].multiplicity == 3);

  CHECK_THROWS_AS(squarefree_decompose(P("x0^2", 1, Field::prime(3))), UnsupportedCharacteristic);
}

TEST_CASE("squarefree decomposition reproduces its input") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    MultiPoly f = random_poly(rng, 3, 2, 3) * random_poly(rng, 3, 2, 2).pow(2) * random_poly(rng, 3, 1, 2).pow(3);
    if (f.is_zero()) continue;
    auto d = squarefree_decompose(f);
    CHECK(d.expand(Q, 3) == f);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      CHECK_FALSE(d.factors[i].poly.is_constant());
      CHECK(d.factors[i].poly == normalized(d.factors[i].poly));
      if (i) CHECK(d.factors[i - 1].multiplicity < d.factors[i].multiplicity);
      for (std::size_t j = 0; j < i; ++j) CHECK(gcd(d.factors[i].poly, d.factors[j].poly).is_one());
    }
  }
}

TEST_CASE("square root up to a scalar") {
  auto r = square_root_up_to_scalar(P("-12*x0^2*x1^4+24*x0*x1^3*x2-12*x1^2*x2^2", 3));
  REQUIRE(r);
  CHECK(*r == P("x0*x1^2-x1*x2", 3));
  CHECK_FALSE(square_root_up_to_scalar(P("x0^2+x1^2", 2)));
  CHECK_FALSE(square_root_up_to_scalar(P("x0*x1", 2)));
  CHECK(*square_root_up_to_scalar(P("5", 2)) == P("1", 2));
  CHECK_THROWS_AS(square_root_up_to_scalar(P("x0^2", 1, Field::prime(2))), UnsupportedCharacteristic);
}

TEST_CASE("Euler relation for homogeneous polynomials") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    MultiPoly f = random_poly(rng, 3, 3, 5);
    std::vector<Term> hom;
    const int d = f.total_degree();
    for (const auto& term : f.terms())
      if (static_cast<int>(term.exp.degree()) == d) hom.push_back(term);
    MultiPoly h = MultiPoly::from_terms(Q, 3, hom);
    if (h.is_zero()) continue;
    MultiPoly euler(Q, 3);
    for (std::size_t i = 0; i < 3; ++i) euler += MultiPoly::variable(Q, 3, i) * h.derivative(i);
    CHECK(euler == h.scaled(Coeff(Q, static_cast<long>(d))));
  }
}
