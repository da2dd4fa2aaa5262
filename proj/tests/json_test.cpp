#include <doctest.h>

#include "cremona/builtins.hpp"
#include "cremona/errors.hpp"
#include "cremona/json_io.hpp"
#include "cremona/monomial_map.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::test;

TEST_CASE("maps round-trip through json") {
  for (const char* name : {"sigma", "theta", "chi1", "g", "quadric-family"}) {
    ProjMap f = builtin(name, 4).map;
    json j = json::parse(to_json(f).dump());
    CHECK(map_from_json(j, Q) == f);
  }
  Field f7 = Field::prime(7);
  ProjMap s = sigma_map(f7, 3);
  CHECK(map_from_json(to_json(s), f7) == s);
  CHECK(parse_map(format_map(builtin("g", 3).map), Q) == builtin("g", 3).map);
}

TEST_CASE("matrices round-trip through json") {
  IntMatrix a{{2, 1, 0}, {1, 1, 0}, {0, 0, -1}};
  CHECK(matrix_from_json(json::parse(to_json(a).dump())) == a);
  CHECK(parse_matrix(a.to_string()) == a);
  IntMatrix big(2);
  big(0, 0) = mpz_class("123456789012345678901234567890");
  big(1, 1) = 1;
  CHECK(matrix_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix("not a matrix"), ParseError);
}

TEST_CASE("words round-trip through json") {
  Certifier cert(3, Q);
  GnWord w = cert.generators().chi0().flatten(3, Q);
  GnWord back = gnword_from_json(json::parse(to_json(w).dump()), Q);
  CHECK(back.n == w.n);
  CHECK(back.letters == w.letters);

  CoeffMatrix half(4, std::vector<Coeff>(4, Coeff(Q, 0L)));
  for (std::size_t i = 0; i < 4; ++i) half[i][i] = Coeff(Q, mpq_class(1, 2));
  GnWord h{3, Q, {GnLetter::make_linear(half), GnLetter::make_sigma()}};
  CHECK(gnword_from_json(to_json(h), Q).letters == h.letters);

  json singular = to_json(h);
  singular["letters"][0]["lin"][0] = json::array({"0", "0", "0", "0"});
  CHECK_THROWS_AS(gnword_from_json(singular, Q), ParseError);
}

TEST_CASE("certificates serialize their word") {
  Certifier c4(4, Q);
  Certificate c = c4.certify_monomial(MonomialMap::from_matrix(Q, IntMatrix::elementary(4, 1, 0, 1)));
  json j = json::parse(to_json(c).dump());
  CHECK(j["result"] == "word");
  CHECK(j["verified"] == true);
  GnWord w = gnword_from_json(j["word"], Q);
  CHECK(equal_up_to_scalar(eval_word(w), parse_map(j["target"].get<std::string>(), Q)));

  Certifier c3(3, Q);
  Certificate o = c3.certify_monomial(MonomialMap::from_matrix(Q, IntMatrix::elementary(3, 1, 0, 1)));
  json oj = to_json(o);
  CHECK(oj["result"] == "obstruction");
  CHECK(oj["obstruction"]["verdict"] == to_string(Verdict::Obstructed));
}
