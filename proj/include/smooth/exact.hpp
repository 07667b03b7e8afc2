#pragma once

#include <gmpxx.h>

#include <optional>
#include <queue>
#include <vector>

#include "smooth/basis.hpp"
#include "smooth/bigreal.hpp"
#include "smooth/xvalue.hpp"

namespace smooth {

// Largest e with base^e <= y, for y >= 1. Exact.
unsigned long floor_log(long base, const mpz_class& y);

// Largest e with base^e * divisor <= x. Throws DivisorExceedsX.
unsigned long floor_log(long base, const XValue& x, const mpz_class& divisor = 1);

// Reference implementation: doubling then binary search on exact powers.
unsigned long floor_log_by_search(long base, const mpz_class& y);

mpz_class count_smooth(const Basis& basis, const XValue& x);

// |{(p, q) : a^(p^2) b^(q^2) <= x}|.
mpz_class count_squares_exact(long a, long b, const XValue& x);

// Members of the semigroup generated by a basis, in increasing order.
// Candidates are kept as exponent tuples ordered by their logarithms; ties
// within rounding distance are settled by exact integer comparison.
class SmoothStream {
 public:
  SmoothStream(const Basis& basis, const XValue& limit);
  // The heap comparator points back at the stream.
  SmoothStream(const SmoothStream&) = delete;
  SmoothStream& operator=(const SmoothStream&) = delete;

  std::optional<mpz_class> next();

 private:
  struct Candidate {
    BigReal log_value;
    std::vector<unsigned long> exponents;
    // Index of the last nonzero exponent; children only raise indices >= it.
    std::size_t last;
  };
  struct Later {
    const SmoothStream* self;
    bool operator()(const Candidate& a, const Candidate& b) const;
  };

  mpz_class value_of(const std::vector<unsigned long>& exponents) const;

  std::vector<long> elements_;
  std::vector<BigReal> logs_;
  mpz_class limit_;
  BigReal tolerance_;
  std::priority_queue<Candidate, std::vector<Candidate>, Later> heap_;
  std::optional<mpz_class> last_;
};

SmoothStream generate_smooth(const Basis& basis, const XValue& limit);

}  // namespace smooth
