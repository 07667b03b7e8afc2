#pragma once

#include <optional>
#include <utility>

#include "smooth/analytic.hpp"

namespace smooth {

struct SquaresTruncation {
  // (N, M) for the double Bessel series.
  std::pair<long, long> nm_cap{5, 5};
  // K for both single Bessel series.
  long k_cap = 400;
};

// Bessel-series value of |{(p, q) : a^(p^2) b^(q^2) <= x}| for x > 1.
// terms_used is {N, M, K}.
EvalReport n2_formula(long a, long b, const XValue& x, const SquaresTruncation& trunc,
                      const PrecisionContext& ctx);

// Smallest symmetric cap c <= max_cap with (c, c) rounding to the exact count.
std::optional<long> first_rounding_cap(long a, long b, const XValue& x, long max_cap,
                                       long k_cap, const PrecisionContext& ctx);

}  // namespace smooth
