#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "cremona/certify.hpp"
#include "cremona/glword.hpp"
#include "cremona/gnword.hpp"
#include "cremona/obstruction.hpp"

namespace cremona {

using json = nlohmann::json;

// Parsers throw ParseError on malformed input.
Coeff parse_coeff(std::string_view text, Field f);

json to_json(const ProjMap& f);
ProjMap map_from_json(const json& j, Field f);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
// "[[1,0],[0,1]]".
IntMatrix parse_matrix(std::string_view text);

json to_json(const GlLetter& g);
json to_json(const GlWord& w);

json to_json(const GnWord& w);
GnWord gnword_from_json(const json& j, Field f);

json to_json(const SqfDecomp& d);
json to_json(const ObstructionReport& r);
json to_json(const Certificate& c);

}  // namespace cremona
