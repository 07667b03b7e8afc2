#pragma once

#include "smooth/analytic.hpp"

namespace smooth::detail {

// Oscillatory series of any cot or shifted-argument variant with n >= 1.
OscillatorySum oscillatory_sum(FormulaVariant variant, const Basis& basis, const XValue& x,
                               double R, unsigned jobs, const PrecisionContext& ctx);

}  // namespace smooth::detail
