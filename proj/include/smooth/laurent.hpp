#pragma once

#include <vector>

#include "smooth/bigreal.hpp"

namespace smooth {

// s^(-order) * sum_j c_j s^j, truncated after a fixed degree of the regular part.
class LaurentSeries {
 public:
  LaurentSeries(std::vector<BigReal> coefficients, int order);

  // e^(L s) through degree d.
  static LaurentSeries exponential(const BigReal& l, int degree);
  // z / (1 - e^(-z)) at z = t s, through degree d.
  static LaurentSeries bernoulli_gf(const BigReal& t, int degree);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigReal& coefficient(int j) const { return c_.at(static_cast<std::size_t>(j)); }

  // Product truncated to the smaller of the two degrees; exact through it.
  LaurentSeries operator*(const LaurentSeries& other) const;
  LaurentSeries& operator*=(const BigReal& scalar);

  // Coefficient of s^(-1).
  BigReal residue() const;

 private:
  std::vector<BigReal> c_;
  int order_;
};

// beta_j = B_j / j! with B_1 = +1/2, i.e. the Taylor coefficients of
// z / (1 - e^(-z)), for j = 0..degree.
std::vector<BigReal> bernoulli_gf_coefficients(int degree, mpfr_prec_t bits);

}  // namespace smooth
