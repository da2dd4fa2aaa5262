#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "cremona/generators.hpp"
#include "cremona/glword.hpp"
#include "cremona/monomial_map.hpp"
#include "cremona/obstruction.hpp"

namespace cremona {

struct Certificate {
  ProjMap target;
  std::variant<GnWord, ObstructionReport> result;
  // The word with its subword structure, which evaluates with smaller intermediate maps.
  WordExpr expr;
  // Set once the word has been evaluated and compared with the target.
  bool verified = false;

  bool has_word() const { return std::holds_alternative<GnWord>(result); }
  const GnWord& word() const { return std::get<GnWord>(result); }
  const ObstructionReport& obstruction() const { return std::get<ObstructionReport>(result); }
};

// Builds and checks generator words in dimension n. Not thread-safe: it
// memoizes evaluated sub-words.
class Certifier {
 public:
  Certifier(std::size_t n, Field f, EvalOptions opts = {});

  std::size_t dim() const { return gens_.dim(); }
  Field field() const { return gens_.field(); }
  const GeneratorWords& generators() const { return gens_; }

  ProjMap evaluate(const WordExpr& w);

  // Word for the coefficient-one monomial map of a; needs n even or a in GL(n,Z)_odd.
  WordExpr monomial_word(const IntMatrix& a);
  // Word for m, or an obstruction when n is odd and m's matrix is not in GL(n,Z)_odd.
  Certificate certify_monomial(const MonomialMap& m);

  // Projectivized (x1 + c x2^v2 ... xn^vn, x2, ..., xn); v holds v2..vn.
  ProjMap tame_elementary_map(const std::vector<unsigned>& v, const Coeff& c) const;
  WordExpr tame_elementary_word(const std::vector<unsigned>& v, const Coeff& c);
  // Verified word for tame_elementary_map(v, c).
  GnWord certify_tame_elementary(const std::vector<unsigned>& v, const Coeff& c);

 private:
  WordExpr letter_word(const GlLetter& g);
  WordExpr shear_part(const std::vector<unsigned>& v, const Coeff& c);
  Permutation lift(const Permutation& p) const;

  GeneratorWords gens_;
  WordEvaluator eval_;
  std::map<std::tuple<int, std::vector<std::size_t>, std::size_t, std::size_t, int>, WordExpr> letters_;
};

// Construction used for x1 + c x2^v2 ... xn^vn.
enum class TameBranch { Constant, EvenExponent, UnitExponent, RaisedOdd };
const char* to_string(TameBranch b);
TameBranch tame_branch(std::size_t n, const std::vector<unsigned>& v);

struct NagataCheck {
  ProjMap nagata;
  // alpha o beta o alpha^{-1} equals N up to scalar.
  bool identity_holds = false;
  // The assembled generator word evaluates to N.
  bool word_holds = false;
  // The inverted word composed with N is the identity.
  bool inverse_holds = false;
  GnWord word;
};

// Projectivized (x + 2y(xz - y^2) + z(xz - y^2)^2, y + z(xz - y^2), z).
ProjMap nagata_map(Field f);
NagataCheck verify_nagata(Field f = Field::rationals());

}  // namespace cremona
