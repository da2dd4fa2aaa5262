#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/certify.hpp"

namespace cremona {

using BuiltinParams = std::map<std::string, std::string>;

struct Builtin {
  std::string name;
  std::size_t n = 0;
  // Closed form, written out directly rather than derived from the word.
  ProjMap map;
  // Generator word when the map is known to be generated by sigma_n and linear maps.
  std::optional<WordExpr> word;
};

struct BuiltinInfo {
  std::string name;
  std::string summary;
  // Smallest dimension for which the map is defined.
  std::size_t min_n;
};

const std::vector<BuiltinInfo>& builtin_catalog();

// Throws std::invalid_argument for unknown names, bad parameters or dimensions.
// Words come from cert, whose dimension and field fix those of the result.
Builtin builtin(const std::string& name, Certifier& cert, const BuiltinParams& params = {});
Builtin builtin(const std::string& name, std::size_t n, Field f = Field::rationals(), const BuiltinParams& params = {});

}  // namespace cremona
