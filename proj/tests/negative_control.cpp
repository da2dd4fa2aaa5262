#include <iostream>

#include "cremona/selftest.hpp"

// A builtin table whose theta has the wrong closed form must fail the builtin-word check.
int main() {
  cremona::selftest::Options opts;
  opts.only = "builtin-words";
  auto base = cremona::selftest::default_builtins();
  opts.builtins = [base](const std::string& name, cremona::Certifier& cert, const cremona::BuiltinParams& params) {
    cremona::Builtin b = base(name, cert, params);
    if (name == "theta") b.map = cremona::sigma_map(cert.field(), cert.dim());
    return b;
  };
  auto outcomes = cremona::selftest::run(opts);
  cremona::selftest::print(std::cout, outcomes);
  if (outcomes.size() != 1 || outcomes[0].passed) {
    std::cout << "corrupted builtin table was not detected\n";
    return 1;
  }
  std::cout << "corrupted builtin table detected\n";
  return 0;
}
