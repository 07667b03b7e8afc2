#include "smooth/laurent.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace smooth {

LaurentSeries::LaurentSeries(std::vector<BigReal> coefficients, int order)
    : c_(std::move(coefficients)), order_(order) {
  if (c_.empty()) throw std::invalid_argument("empty series");
}

LaurentSeries LaurentSeries::exponential(const BigReal& l, int degree) {
  std::vector<BigReal> c;
  BigReal term(1L, l.precision());
  c.push_back(term);
  for (int j = 1; j <= degree; ++j) {
    term *= l;
    term /= j;
    c.push_back(term);
  }
  return LaurentSeries(std::move(c), 0);
}

LaurentSeries LaurentSeries::bernoulli_gf(const BigReal& t, int degree) {
  std::vector<BigReal> beta = bernoulli_gf_coefficients(degree, t.precision());
  BigReal tj(1L, t.precision());
  for (int j = 0; j <= degree; ++j) {
    beta[j] *= tj;
    tj *= t;
  }
  return LaurentSeries(std::move(beta), 0);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& other) const {
  int d = std::min(degree(), other.degree());
  mpfr_prec_t bits = std::max(c_[0].precision(), other.c_[0].precision());
  std::vector<BigReal> out;
  for (int k = 0; k <= d; ++k) {
    BigReal sum(bits);
    for (int j = 0; j <= k; ++j) sum += c_[j] * other.c_[k - j];
    out.push_back(std::move(sum));
  }
  return LaurentSeries(std::move(out), order_ + other.order_);
}

LaurentSeries& LaurentSeries::operator*=(const BigReal& scalar) {
  for (auto& c : c_) c *= scalar;
  return *this;
}

BigReal LaurentSeries::residue() const {
  int j = order_ - 1;
  if (j < 0) return BigReal(0L, c_[0].precision());
  if (j > degree()) throw std::out_of_range("series truncated below the residue term");
  return c_[j];
}

std::vector<BigReal> bernoulli_gf_coefficients(int degree, mpfr_prec_t bits) {
  // sum_{k<=m} C(m+1, k) B_k = 0 with B_0 = 1 gives B_1 = -1/2; flip it.
  std::vector<mpq_class> b(static_cast<std::size_t>(degree) + 1);
  b[0] = 1;
  for (int m = 1; m <= degree; ++m) {
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      sum += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -sum / (m + 1);
  }
  if (degree >= 1) b[1] = -b[1];
  std::vector<BigReal> out;
  mpz_class factorial = 1;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) factorial *= j;
    mpq_class beta = b[j] / factorial;
    BigReal r(bits);
    mpfr_set_q(r.raw(), beta.get_mpq_t(), MPFR_RNDN);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace smooth
