#include "cremona/json_io.hpp"

#include <string>

#include "cremona/errors.hpp"
#include "cremona/polytext.hpp"

namespace cremona {

Coeff parse_coeff(std::string_view text, Field f) {
  MultiPoly p = parse_poly(text, f, 1);
  if (!p.is_constant()) throw ParseError("expected a constant, got " + std::string(text));
  return p.constant_coeff();
}

json to_json(const ProjMap& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(format_poly(c));
  return json{{"n", f.dim()}, {"components", comps}};
}

ProjMap map_from_json(const json& j, Field f) {
  try {
    const auto& comps = j.at("components");
    std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : comps.size() - 1;
    if (comps.size() != n + 1) throw ParseError("map needs n + 1 components");
    std::vector<MultiPoly> polys;
    for (const auto& c : comps) polys.push_back(parse_poly(c.get<std::string>(), f, n + 1));
    return ProjMap::make(std::move(polys));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad map json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid map: ") + e.what());
  }
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).fits_slong_p())
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != n) throw ParseError("matrix must be square");
    std::vector<mpz_class> row;
    for (const auto& v : r) {
      if (v.is_number_integer())
        row.emplace_back(static_cast<long>(v.get<long long>()));
      else if (v.is_string())
        try {
          row.emplace_back(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw ParseError("bad matrix entry " + v.get<std::string>());
        }
      else
        throw ParseError("matrix entries must be integers");
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix(rows);
}

IntMatrix parse_matrix(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw ParseError("matrix must be written as [[a,b],[c,d]]");
  return matrix_from_json(j);
}

json to_json(const GlLetter& g) {
  json out{{"kind", to_string(g.kind)}, {"exp", g.exp}};
  if (!g.perm.is_identity()) out["perm"] = g.perm.image;
  if (g.kind == GlKind::Transvection) {
    out["i"] = g.i;
    out["j"] = g.j;
    out["sign"] = g.sign;
  }
  return out;
}

json to_json(const GlWord& w) {
  json letters = json::array();
  for (const auto& g : w.letters) letters.push_back(to_json(g));
  return json{{"n", w.n}, {"target", to_json(w.target)}, {"letters", letters}};
}

json to_json(const GnWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters) {
    if (l.sigma) {
      letters.push_back(json{{"sigma", true}});
      continue;
    }
    json rows = json::array();
    for (const auto& r : l.lin) {
      json row = json::array();
      for (const auto& c : r) row.push_back(c.to_string());
      rows.push_back(row);
    }
    letters.push_back(json{{"lin", rows}});
  }
  return json{{"n", w.n}, {"field", w.field.name()}, {"letters", letters}};
}

GnWord gnword_from_json(const json& j, Field f) {
  try {
    GnWord w{j.at("n").get<std::size_t>(), f, {}};
    if (w.n < 1 || w.n + 1 > kMaxVars) throw ParseError("word dimension out of range");
    for (const auto& l : j.at("letters")) {
      if (l.contains("sigma")) {
        w.letters.push_back(GnLetter::make_sigma());
        continue;
      }
      const auto& rows = l.at("lin");
      if (rows.size() != w.n + 1) throw ParseError("linear letter has wrong size");
      CoeffMatrix m;
      for (const auto& r : rows) {
        if (r.size() != w.n + 1) throw ParseError("linear letter has wrong size");
        std::vector<Coeff> row;
        for (const auto& c : r)
          row.push_back(c.is_number_integer() ? Coeff(f, static_cast<long>(c.get<long long>()))
                                              : parse_coeff(c.get<std::string>(), f));
        m.push_back(std::move(row));
      }
      try {
        inverse_matrix(m);
      } catch (const std::invalid_argument&) {
        throw ParseError("singular linear letter");
      }
      w.letters.push_back(GnLetter::make_linear(std::move(m)));
    }
    return w;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad word json: ") + e.what());
  }
}

json to_json(const SqfDecomp& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(json{{"poly", format_poly(f.poly)}, {"mult", f.multiplicity}});
  return json{{"unit", d.unit.to_string()}, {"factors", factors}};
}

json to_json(const ObstructionReport& r) {
  json out{{"verdict", to_string(r.verdict)}, {"jacobian", format_poly(r.jacobian)}};
  if (r.witness_factor) out["witnessFactor"] = format_poly(*r.witness_factor);
  if (r.witness_multiplicity) out["witnessMultiplicity"] = *r.witness_multiplicity;
  json factors = json::array();
  if (r.decomposition) {
    out["unit"] = r.decomposition->unit.to_string();
    for (const auto& f : r.decomposition->factors)
      factors.push_back(json{{"poly", format_poly(f.poly)}, {"mult", f.multiplicity}});
  }
  out["factors"] = factors;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

json to_json(const Certificate& c) {
  json out{{"target", format_map(c.target)}, {"verified", c.verified}};
  if (c.has_word()) {
    out["result"] = "word";
    out["length"] = c.word().letters.size();
    out["word"] = to_json(c.word());
  } else {
    out["result"] = "obstruction";
    out["obstruction"] = to_json(c.obstruction());
  }
  return out;
}

}  // namespace cremona
