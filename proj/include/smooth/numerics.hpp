#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "smooth/bigreal.hpp"

namespace smooth {

class XValue;

// Working precision plus the constants derived from it. Copies share nothing
// mutable; the log cache is guarded so one context may serve many threads.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kMinDigits = 15;

  explicit PrecisionContext(int digits = kDefaultDigits);
  PrecisionContext(const PrecisionContext& other);
  PrecisionContext& operator=(const PrecisionContext&) = delete;

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_; }
  const BigReal& pi() const { return pi_; }

  // ln(n) for n >= 2, computed once per context.
  const BigReal& log_of(long n) const;

  BigReal make(long v) const { return BigReal(v, bits_); }
  BigReal parse(std::string_view text) const { return BigReal::parse(text, bits_); }

 private:
  struct LogCache {
    std::mutex mu;
    std::map<long, std::unique_ptr<BigReal>> values;
  };

  int digits_;
  mpfr_prec_t bits_;
  BigReal pi_;
  std::unique_ptr<LogCache> cache_;
};

mpfr_prec_t bits_for_digits(int digits);

// Digits needed to carry `output_digits` valid digits in frac(log x / log a)
// when log x / log a has `integer_digits` digits before the point.
int escalated_digits(const XValue& x, long smallest_base, int output_digits);

BigReal hp_log(long n, const PrecisionContext& ctx);

// ln x at `bits` precision; exact integer / power-of-ten / rational forms.
BigReal log_of(const XValue& x, mpfr_prec_t bits);

struct SinCos {
  BigReal sin;
  BigReal cos;
};

// sin and cos after explicit reduction modulo 2 pi at extended precision.
SinCos hp_sincos(const BigReal& theta, const PrecisionContext& ctx);

// sin and cos of 2 pi t, where t is given in turns. Only frac(t) matters,
// so large t loses no accuracy beyond what t itself carries.
SinCos sincos_turns(const BigReal& turns, const PrecisionContext& ctx);

// |t - round(t)| below this counts as an integer for b1_star.
BigReal integrality_tolerance(const PrecisionContext& ctx);

BigReal b1_star(const BigReal& t, const BigReal& tolerance);
BigReal b2_frac(const BigReal& t);

BigReal bessel_j1(const BigReal& z, const PrecisionContext& ctx);

struct LogRatio {
  mpz_class integer_part;
  BigReal fraction;
  // x is an exact power of a; fraction is exactly zero.
  bool exact_power = false;
};

// floor(log_a x) exactly, and log_a x minus that, carrying ctx.digits() valid
// digits in the fraction.
LogRatio frac_log_ratio(const XValue& x, long a, const PrecisionContext& ctx);

}  // namespace smooth
