#pragma once

#include <string>

#include "smooth/bigreal.hpp"

namespace smooth {

// Fixed-point decimal with `places` digits after the point. The exact binary
// value is rounded once, half to even.
std::string to_fixed(const BigReal& v, int places);

// Fixed-point with `significant` digits in total (at least one before the point).
std::string to_fixed_significant(const BigReal& v, int significant);

}  // namespace smooth
