#pragma once

#include <stdexcept>
#include <string>

namespace smooth {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisorExceedsX : public std::domain_error {
 public:
  DivisorExceedsX() : std::domain_error("divisor exceeds x") {}
};

// A sine denominator sin(pi k log a_i / log a_m) lost too many digits.
class ResonantDenominator : public std::runtime_error {
 public:
  ResonantDenominator(int family, long k, double magnitude)
      : std::runtime_error("resonant denominator in family " + std::to_string(family) +
                           " at k=" + std::to_string(k)),
        family_(family),
        k_(k),
        magnitude_(magnitude) {}

  int family() const { return family_; }
  long k() const { return k_; }
  double magnitude() const { return magnitude_; }

 private:
  int family_;
  long k_;
  double magnitude_;
};

}  // namespace smooth
