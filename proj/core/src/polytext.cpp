#include "cremona/polytext.hpp"

#include <cctype>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Field field) : field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  std::vector<Term> parse(std::size_t& max_var) {
    std::vector<Term> terms;
    if (s_.empty()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    terms.push_back(term(negative));
    while (pos_ < s_.size()) {
      char c = s_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      terms.push_back(term(c == '-'));
    }
    max_var = max_var_;
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  Term term(bool negative) {
    Term t{Exponents{}, Coeff(field_, 1)};
    bool seen = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Coeff(field_, mpq_class(num, den));
      seen = true;
    }
    for (;;) {
      std::size_t save = pos_;
      if (peek() == '*') ++pos_;
      if (peek() != 'x') {
        if (pos_ != save) fail("expected a variable after '*'");
        break;
      }
      ++pos_;
      std::string idx = digits();
      if (idx.size() > 2) fail("variable index too large");
      std::size_t v = std::stoul(idx);
      if (v >= kMaxVars) fail("variable index too large");
      std::uint32_t power = 1;
      if (peek() == '^') {
        ++pos_;
        std::string p = digits();
        if (p.size() > 5) fail("exponent too large");
        power = static_cast<std::uint32_t>(std::stoul(p));
      }
      t.exp.set(v, t.exp[v] + power);
      max_var_ = std::max(max_var_, v + 1);
      seen = true;
    }
    if (!seen) fail("expected a term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Field field_;
  std::string s_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, Field field, std::size_t num_vars) {
  PolyParser parser(text, field);
  std::size_t used = 0;
  std::vector<Term> terms = parser.parse(used);
  if (num_vars == 0) num_vars = std::max<std::size_t>(used, 1);
  if (used > num_vars)
    throw ParseError("polynomial '" + std::string(text) + "' uses x" + std::to_string(used - 1) +
                     " but only " + std::to_string(num_vars) + " variables are available");
  return MultiPoly::from_terms(field, num_vars, std::move(terms));
}

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    bool first = true;
    if (c != "1" || t.exp.degree() == 0) {
      out += c;
      first = false;
    }
    for (std::size_t v = 0; v < p.num_vars(); ++v) {
      if (!t.exp[v]) continue;
      if (!first) out += '*';
      first = false;
      out += 'x' + std::to_string(v);
      if (t.exp[v] > 1) out += '^' + std::to_string(t.exp[v]);
    }
  }
  return out;
}

}  // namespace cremona
