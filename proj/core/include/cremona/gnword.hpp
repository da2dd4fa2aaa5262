#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cremona/intmatrix.hpp"
#include "cremona/projmap.hpp"

namespace cremona {

using CoeffMatrix = std::vector<std::vector<Coeff>>;

// A generator: the standard involution sigma_n or an invertible linear map
// (component i = sum_j lin[i][j] x_j).
struct GnLetter {
  bool sigma = false;
  CoeffMatrix lin;

  static GnLetter make_sigma() { return GnLetter{true, {}}; }
  static GnLetter make_linear(CoeffMatrix m) { return GnLetter{false, std::move(m)}; }
  friend bool operator==(const GnLetter&, const GnLetter&) = default;
};

// Word l_1 l_2 ... l_k; it denotes the composition l_1 o l_2 o ... o l_k.
struct GnWord {
  std::size_t n = 0;
  Field field;
  std::vector<GnLetter> letters;
};

// Left: P <- P o letter from the first letter on. Right: Q <- letter o Q from the last.
enum class Fold { Left, Right };

struct EvalOptions {
  // Abort with DegreeGuardrail when an intermediate map exceeds this degree.
  int max_degree = 64;
  Fold fold = Fold::Left;
};

ProjMap sigma_map(Field f, std::size_t n);
ProjMap letter_map(const GnLetter& letter, std::size_t n, Field f);
CoeffMatrix inverse_matrix(const CoeffMatrix& m);
GnLetter inverse(const GnLetter& letter);
GnWord inverse(const GnWord& w);
// Linear letter R with R(x)_{rho(i)} = x_i, for a permutation rho of {0..n}.
GnLetter permutation_letter(Field f, const Permutation& rho);

// Composes letters from the left: P = l_1, P = P o l_2, ...
ProjMap eval_word(const GnWord& w, const EvalOptions& opts = {});

// Right composition with a single letter, cancelling only what can cancel.
ProjMap compose_letter(const ProjMap& p, const GnLetter& letter);

// Words with shared sub-words, so that long generator words can be built and
// evaluated without re-expanding common pieces.
class WordExpr {
 public:
  WordExpr() = default;
  static WordExpr letter(GnLetter l);
  static WordExpr sigma() { return letter(GnLetter::make_sigma()); }
  static WordExpr linear(CoeffMatrix m) { return letter(GnLetter::make_linear(std::move(m))); }
  // The fold direction is reversed for the inverse word.
  static WordExpr concat(const std::vector<WordExpr>& parts, Fold fold = Fold::Left);

  // this o other.
  friend WordExpr operator*(const WordExpr& a, const WordExpr& b) { return concat({a, b}); }
  WordExpr inverse() const;

  bool empty() const { return !node_; }
  std::size_t letter_count() const;
  GnWord flatten(std::size_t n, Field f) const;

 private:
  friend class WordEvaluator;
  struct Node {
    std::optional<GnLetter> leaf;
    Fold fold = Fold::Left;
    std::vector<WordExpr> parts;
    std::size_t count = 0;
  };
  void append_to(std::vector<GnLetter>& out, bool inverted) const;

  std::shared_ptr<const Node> node_;
  bool inverted_ = false;
};

// Evaluates WordExprs, memoizing every shared sub-word.
class WordEvaluator {
 public:
  WordEvaluator(std::size_t n, Field f, EvalOptions opts = {});
  ProjMap evaluate(const WordExpr& w);
  std::size_t dim() const { return n_; }
  Field field() const { return field_; }

 private:
  using Key = std::pair<const void*, bool>;
  struct Entry {
    std::shared_ptr<const void> keep_alive;
    ProjMap map;
  };
  ProjMap evaluate_node(const WordExpr& w);

  std::size_t n_;
  Field field_;
  EvalOptions opts_;
  std::map<Key, Entry> memo_;
};

}  // namespace cremona
