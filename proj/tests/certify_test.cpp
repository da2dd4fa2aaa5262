#include <doctest.h>

#include "cremona/builtins.hpp"
#include "cremona/certify.hpp"
#include "cremona/errors.hpp"
#include "cremona/monomial_map.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

TEST_CASE("word evaluation") {
  CHECK(eval_word(GnWord{3, Q, {}}) == ProjMap::identity(Q, 3));
  for (std::size_t n = 3; n <= 4; ++n) {
    Builtin chi0 = builtin("chi0", n);
    REQUIRE(chi0.word);
    GnWord flat = chi0.word->flatten(n, Q);
    CHECK(equal_up_to_scalar(eval_word(flat), chi0.map));
    CHECK(equal_up_to_scalar(eval_word(flat, {64, Fold::Right}), chi0.map));
  }
}

TEST_CASE("builtins carry words where the map is generated") {
  Builtin theta = builtin("theta", 3);
  CHECK(theta.map == M("[x0*x1:x0^2:x1*x2:x1*x3]"));
  REQUIRE(theta.word);
  CHECK(theta.word->letter_count() == 5);

  Builtin chi1 = builtin("chi1", 4);
  ProjMap printed = M("[x0*x1*x2^2*x3:x0*x1*x2^3:-x0*x3^4:x1*x2^2*x3^2:x1*x2^2*x3*x4]");
  CHECK(equal_up_to_scalar(chi1.map, printed));
  REQUIRE(chi1.word);
  CHECK(equal_up_to_scalar(eval_word(chi1.word->flatten(4, Q)), printed));

  CHECK_FALSE(builtin("xi", 3).word);
  CHECK(builtin("xi", 4).word);
  CHECK_THROWS_AS(builtin("no-such-map", 3), std::invalid_argument);
  CHECK_THROWS_AS(builtin("chi0", 2), std::invalid_argument);
}

TEST_CASE("word inverse") {
  Certifier cert(3, Q);
  WordExpr w = cert.generators().chi0();
  GnWord flat = w.flatten(3, Q);
  ProjMap f = eval_word(flat), g = eval_word(inverse(flat));
  CHECK(compose(f, g) == ProjMap::identity(Q, 3));
  CHECK(cert.evaluate(w.inverse()) == g);
  CHECK(w.inverse().flatten(3, Q).letters.size() == flat.letters.size());
}

TEST_CASE("monomial certificates") {
  Certifier c4(4, Q);
  MonomialMap xi4 = MonomialMap::from_matrix(Q, IntMatrix::elementary(4, 1, 0, 1));
  Certificate a = c4.certify_monomial(xi4);
  REQUIRE(a.has_word());
  CHECK(a.verified);
  CHECK(equal_up_to_scalar(eval_word(a.word()), builtin("xi", 4).map));

  Certifier c3(3, Q);
  Certificate b = c3.certify_monomial(MonomialMap::from_matrix(Q, IntMatrix::elementary(3, 1, 0, 1)));
  REQUIRE_FALSE(b.has_word());
  CHECK(b.obstruction().verdict == Verdict::Obstructed);

  Certifier c5(5, Q);
  auto d = from_projective(builtin("dolgachev", 5).map);
  REQUIRE(d);
  Certificate dc = c5.certify_monomial(*d);
  REQUIRE(dc.has_word());
  CHECK(dc.verified);
  WordEvaluator fresh(5, Q);
  CHECK(equal_up_to_scalar(fresh.evaluate(dc.expr), builtin("dolgachev", 5).map));

  Builtin mu = builtin("mu", 3);
  REQUIRE(mu.word);
  CHECK(equal_up_to_scalar(c3.evaluate(*mu.word), mu.map));
}

TEST_CASE("tame elementary maps") {
  Certifier c3(3, Q);
  CHECK(c3.tame_elementary_word({2, 0}, Coeff(Q, 0L)).empty());
  GnWord derksen = c3.certify_tame_elementary({2, 0}, Coeff(Q, 1L));
  CHECK(equal_up_to_scalar(eval_word(derksen), M("[x0^2:x1*x0+x2^2:x2*x0:x3*x0]")));
  CHECK(tame_branch(3, {1, 1}) == TameBranch::UnitExponent);
  GnWord unit = c3.certify_tame_elementary({1, 1}, Coeff(Q, 1L));
  CHECK(equal_up_to_scalar(eval_word(unit), c3.tame_elementary_map({1, 1}, Coeff(Q, 1L))));
  CHECK(tame_branch(3, {0, 0}) == TameBranch::Constant);
  CHECK(tame_branch(3, {3, 3}) == TameBranch::RaisedOdd);
  CHECK(tame_branch(4, {3, 3}) == TameBranch::EvenExponent);
}

TEST_CASE("Nagata automorphism") {
  NagataCheck n = verify_nagata();
  CHECK(n.identity_holds);
  CHECK(n.word_holds);
  CHECK(n.inverse_holds);
  CHECK(equal_up_to_scalar(eval_word(n.word), nagata_map(Q)));
}

TEST_CASE("characteristic two is refused") {
  Field f2 = Field::prime(2);
  Certifier c4(4, f2);
  CHECK_THROWS_AS(c4.monomial_word(IntMatrix::elementary(4, 1, 0, 1)), UnsupportedCharacteristic);
  CHECK_THROWS_AS(c4.certify_tame_elementary({2, 0, 0}, Coeff(f2, 1L)), UnsupportedCharacteristic);
  CHECK(builtin("theta", 3, f2).word);
  CHECK_THROWS_AS(builtin("chi0", 3, f2), UnsupportedCharacteristic);
  CHECK_THROWS_AS(verify_nagata(f2), UnsupportedCharacteristic);
}

TEST_CASE("degree guardrail") {
  GnWord w{3, Q, {}};
  CoeffMatrix shear(4, std::vector<Coeff>(4, Coeff(Q, 0L)));
  for (std::size_t i = 0; i < 4; ++i) shear[i][i] = Coeff(Q, 1L);
  shear[1][0] = Coeff(Q, 1L);
  shear[2][1] = Coeff(Q, 1L);
  shear[3][2] = Coeff(Q, 1L);
  for (int k = 0; k < 12; ++k) {
    w.letters.push_back(GnLetter::make_sigma());
    w.letters.push_back(GnLetter::make_linear(shear));
  }
  CHECK_THROWS_AS(eval_word(w, {8}), DegreeGuardrail);
}
