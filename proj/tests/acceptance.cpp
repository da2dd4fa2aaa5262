#include <iostream>

#include "cremona/selftest.hpp"

int main() {
  auto outcomes = cremona::selftest::run();
  cremona::selftest::print(std::cout, outcomes);
  return cremona::selftest::all_passed(outcomes) ? 0 : 1;
}
