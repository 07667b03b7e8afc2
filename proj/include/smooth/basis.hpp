#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smooth/xvalue.hpp"

namespace smooth {

// Strict: everything the analytic formulas need. Relaxed: drops pairwise
// multiplicative independence (enough for exact counting). Minimal: only
// ordering and the lower bound.
enum class Validation { Strict, Relaxed, Minimal };

struct BasisViolation {
  enum class Kind { NotAscending, ElementBelowTwo, GcdNotOne, MultiplicativelyDependentPair };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string message() const;
  friend bool operator==(const BasisViolation&, const BasisViolation&) = default;
};

class InvalidBasis : public std::invalid_argument {
 public:
  explicit InvalidBasis(std::vector<BasisViolation> violations);
  const std::vector<BasisViolation>& violations() const { return violations_; }

 private:
  std::vector<BasisViolation> violations_;
};

using ExponentVector = std::map<long, int>;

ExponentVector factorize(long n);

class Basis {
 public:
  const std::vector<long>& elements() const { return elements_; }
  const std::vector<ExponentVector>& exponent_vectors() const { return factors_; }
  std::size_t size() const { return elements_.size(); }
  long operator[](std::size_t i) const { return elements_[i]; }
  Validation level() const { return level_; }

 private:
  friend Basis validate_basis(const std::vector<long>& elements, Validation level);

  std::vector<long> elements_;
  std::vector<ExponentVector> factors_;
  Validation level_ = Validation::Strict;
};

// Every violated rule for `level`, in a fixed order.
std::vector<BasisViolation> check_basis(const std::vector<long>& elements,
                                        Validation level = Validation::Strict);

// Throws InvalidBasis listing all violations.
Basis validate_basis(const std::vector<long>& elements, Validation level = Validation::Strict);

// Sorts first, so only duplicates can trip NotAscending.
Basis validate_unsorted(std::vector<long> elements, Validation level = Validation::Strict);

bool is_member(const XValue& x, const Basis& basis);
bool is_member_squares(const XValue& x, long a, long b);

}  // namespace smooth
