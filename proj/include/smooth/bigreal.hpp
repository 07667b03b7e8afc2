#pragma once

#include <mpfr.h>

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace smooth {

// Owning handle for an mpfr_t. Every value carries its own precision; binary
// operators produce a result at the larger of the two operand precisions.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = 64);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const mpz_class& value, mpfr_prec_t bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  // Exact decimal / scientific literal, rounded to nearest.
  static BigReal parse(std::string_view text, mpfr_prec_t bits);
  static BigReal from_double(double value, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Rounds in place to a new precision.
  void set_precision(mpfr_prec_t bits);
  BigReal at_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  friend BigReal operator+(BigReal lhs, const BigReal& rhs);
  friend BigReal operator-(BigReal lhs, const BigReal& rhs);
  friend BigReal operator*(BigReal lhs, const BigReal& rhs);
  friend BigReal operator/(BigReal lhs, const BigReal& rhs);
  friend BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

  // Scientific notation with the given number of significant digits.
  std::string to_scientific(int significant) const;

 private:
  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal floor(const BigReal& x);
// x - floor(x), exact.
BigReal frac(const BigReal& x);
// Nearest integer, ties to even.
mpz_class round_to_integer(const BigReal& x);
mpz_class floor_to_integer(const BigReal& x);
// 10^e at the given precision (e may be negative).
BigReal pow10(long e, mpfr_prec_t bits);

}  // namespace smooth
