#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cremona/builtins.hpp"

namespace cremona::selftest {

using BuiltinSource = std::function<Builtin(const std::string&, Certifier&, const BuiltinParams&)>;

BuiltinSource default_builtins();

struct Criterion {
  int id;
  std::string name;
  std::string title;
};

const std::vector<Criterion>& criteria();

struct Options {
  // Comma-separated criterion names, name fragments or ids; empty runs everything.
  std::string only;
  BuiltinSource builtins = default_builtins();
  std::uint64_t seed = 0x5eed2024;
};

struct Outcome {
  Criterion criterion;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

bool selected(const Criterion& c, const std::string& only);
std::vector<Outcome> run(const Options& opts = {});
bool all_passed(const std::vector<Outcome>& outcomes);
void print(std::ostream& os, const std::vector<Outcome>& outcomes);

}  // namespace cremona::selftest
