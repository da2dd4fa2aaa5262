#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Malformed polynomial, map, matrix or word text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation needs characteristic 0 (or characteristic != 2) and got something else.
class UnsupportedCharacteristic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An intermediate map grew beyond the configured degree bound.
class DegreeGuardrail : public std::runtime_error {
 public:
  DegreeGuardrail(int degree, int bound)
      : std::runtime_error("intermediate degree " + std::to_string(degree) +
                           " exceeds bound " + std::to_string(bound)),
        degree_(degree),
        bound_(bound) {}
  int degree() const noexcept { return degree_; }
  int bound() const noexcept { return bound_; }

 private:
  int degree_;
  int bound_;
};

}  // namespace cremona
