#include "smooth/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "smooth/errors.hpp"
#include "smooth/exact.hpp"
#include "smooth/xvalue.hpp"

namespace smooth {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

PrecisionContext::PrecisionContext(int digits)
    : digits_(digits),
      bits_(bits_for_digits(digits)),
      pi_(bits_),
      cache_(std::make_unique<LogCache>()) {
  if (digits < kMinDigits) throw DomainError("precision must be at least 15 digits");
  mpfr_const_pi(pi_.raw(), MPFR_RNDN);
}

PrecisionContext::PrecisionContext(const PrecisionContext& other)
    : digits_(other.digits_),
      bits_(other.bits_),
      pi_(other.pi_),
      cache_(std::make_unique<LogCache>()) {}

const BigReal& PrecisionContext::log_of(long n) const {
  if (n < 2) throw DomainError("log argument must be >= 2");
  std::lock_guard lock(cache_->mu);
  auto& slot = cache_->values[n];
  if (!slot) {
    slot = std::make_unique<BigReal>(bits_);
    mpfr_log_ui(slot->raw(), static_cast<unsigned long>(n), MPFR_RNDN);
  }
  return *slot;
}

namespace {

// Decimal magnitude of ln x, from the exact representation.
double approx_log(const XValue& x) {
  if (x.form() == XValue::Form::PowerOfTen) return x.exponent() * std::log(10.0);
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.numerator().get_mpz_t());
  double lx = std::log(m) + e * std::log(2.0);
  if (x.form() == XValue::Form::Rational) {
    double md = mpz_get_d_2exp(&e, x.denominator().get_mpz_t());
    lx -= std::log(md) + e * std::log(2.0);
  }
  return lx;
}

}  // namespace

int escalated_digits(const XValue& x, long smallest_base, int output_digits) {
  double ratio = approx_log(x) / std::log(static_cast<double>(smallest_base));
  int integer_digits = ratio > 1 ? static_cast<int>(std::ceil(std::log10(ratio))) : 0;
  return output_digits + integer_digits + 10;
}

BigReal hp_log(long n, const PrecisionContext& ctx) { return ctx.log_of(n); }

BigReal log_of(const XValue& x, mpfr_prec_t bits) {
  mpfr_prec_t wp = bits + 32;
  BigReal r(wp);
  switch (x.form()) {
    case XValue::Form::PowerOfTen:
      mpfr_log_ui(r.raw(), 10, MPFR_RNDN);
      mpfr_mul_ui(r.raw(), r.raw(), x.exponent(), MPFR_RNDN);
      break;
    case XValue::Form::Integer: {
      BigReal v(x.numerator(), wp + static_cast<mpfr_prec_t>(
                                        mpz_sizeinbase(x.numerator().get_mpz_t(), 2)));
      mpfr_log(r.raw(), v.raw(), MPFR_RNDN);
      break;
    }
    case XValue::Form::Rational: {
      // log1p((p - q) / q) keeps relative accuracy for x close to 1.
      mpz_class diff = x.numerator() - x.denominator();
      BigReal d(diff, wp);
      BigReal q(x.denominator(), wp);
      mpfr_div(d.raw(), d.raw(), q.raw(), MPFR_RNDN);
      mpfr_log1p(r.raw(), d.raw(), MPFR_RNDN);
      break;
    }
  }
  r.set_precision(bits);
  return r;
}

SinCos hp_sincos(const BigReal& theta, const PrecisionContext& ctx) {
  SinCos out{BigReal(ctx.bits()), BigReal(ctx.bits())};
  if (theta.is_zero()) {
    mpfr_set_ui(out.cos.raw(), 1, MPFR_RNDN);
    return out;
  }
  mpfr_exp_t mag = std::max<mpfr_exp_t>(mpfr_get_exp(theta.raw()), 0);
  mpfr_prec_t wp = std::max(theta.precision(), ctx.bits()) + mag + 16;
  BigReal two_pi(wp);
  mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);

  BigReal r = theta.at_precision(wp);
  BigReal q(wp);
  mpfr_div(q.raw(), r.raw(), two_pi.raw(), MPFR_RNDN);
  mpfr_round(q.raw(), q.raw());
  mpfr_mul(q.raw(), q.raw(), two_pi.raw(), MPFR_RNDN);
  mpfr_sub(r.raw(), r.raw(), q.raw(), MPFR_RNDN);
  mpfr_sin_cos(out.sin.raw(), out.cos.raw(), r.raw(), MPFR_RNDN);
  return out;
}

SinCos sincos_turns(const BigReal& turns, const PrecisionContext& ctx) {
  SinCos out{BigReal(ctx.bits()), BigReal(ctx.bits())};
  mpfr_prec_t wp = ctx.bits() + 8;
  BigReal f = frac(turns);
  // Fold into [-1/2, 1/2) so the angle stays within [-pi, pi).
  if (mpfr_cmp_d(f.raw(), 0.5) >= 0) f -= 1;
  BigReal angle(wp);
  mpfr_const_pi(angle.raw(), MPFR_RNDN);
  mpfr_mul_2ui(angle.raw(), angle.raw(), 1, MPFR_RNDN);
  mpfr_mul(angle.raw(), angle.raw(), f.raw(), MPFR_RNDN);
  mpfr_sin_cos(out.sin.raw(), out.cos.raw(), angle.raw(), MPFR_RNDN);
  return out;
}

BigReal integrality_tolerance(const PrecisionContext& ctx) {
  return pow10(-(ctx.digits() / 2), ctx.bits());
}

BigReal b1_star(const BigReal& t, const BigReal& tolerance) {
  BigReal f = frac(t);
  BigReal upper(f.precision());
  mpfr_ui_sub(upper.raw(), 1, f.raw(), MPFR_RNDN);
  if (f < tolerance || upper < tolerance) return BigReal(0L, t.precision());
  mpfr_sub_d(f.raw(), f.raw(), 0.5, MPFR_RNDN);
  return f;
}

BigReal b2_frac(const BigReal& t) {
  BigReal f = frac(t);
  BigReal r = f * f;
  r -= f;
  BigReal sixth(1L, t.precision());
  sixth /= 6;
  r += sixth;
  return r;
}

namespace {

constexpr double kBesselCrossover = 30.0;

BigReal j1_maclaurin(const BigReal& z, mpfr_prec_t bits) {
  // Terms grow to about e^z before decaying; pay for the cancellation.
  mpfr_prec_t wp = bits + static_cast<mpfr_prec_t>(1.45 * z.to_double()) + 16;
  BigReal half = z.at_precision(wp);
  mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
  BigReal q = half * half;
  BigReal term = half;
  BigReal sum = half;
  for (long m = 1;; ++m) {
    term *= q;
    term /= -(m * (m + 1));
    sum += term;
    if (term.is_zero() || mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(wp)) break;
  }
  sum.set_precision(bits);
  return sum;
}

BigReal j1_asymptotic(const BigReal& z, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.bits() + 16;
  BigReal zz = z.at_precision(wp);
  BigReal p(1L, wp);
  BigReal q(0L, wp);
  // a_k(1) / z^k with a_k = a_{k-1} (4 - (2k-1)^2) / (8k).
  BigReal term(1L, wp);
  double previous = 1.0;
  for (long k = 1;; ++k) {
    long odd = 2 * k - 1;
    term *= 4 - odd * odd;
    term /= 8 * k;
    term /= zz;
    double size = std::fabs(term.to_double());
    if (size >= previous || term.is_zero() ||
        mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(wp)) {
      break;
    }
    previous = size;
    // Even k feed P, odd k feed Q, each with sign (-1)^floor(k/2).
    BigReal& series = k % 2 == 0 ? p : q;
    if ((k / 2) % 2 == 1) {
      series -= term;
    } else {
      series += term;
    }
  }
  PrecisionContext wide(ctx.digits() + 5);
  BigReal chi = zz;
  BigReal shift = wide.pi() * 3;
  shift /= 4;
  chi -= shift;
  SinCos sc = hp_sincos(chi, wide);
  BigReal result = sc.cos.at_precision(wp) * p;
  result -= sc.sin.at_precision(wp) * q;
  // sqrt(2 / (pi z))
  BigReal scale = wide.pi().at_precision(wp) * zz;
  mpfr_ui_div(scale.raw(), 2, scale.raw(), MPFR_RNDN);
  mpfr_sqrt(scale.raw(), scale.raw(), MPFR_RNDN);
  result *= scale;
  result.set_precision(ctx.bits());
  return result;
}

}  // namespace

BigReal bessel_j1(const BigReal& z, const PrecisionContext& ctx) {
  if (z.sign() < 0) throw DomainError("bessel_j1 requires z >= 0");
  if (z.is_zero()) return BigReal(0L, ctx.bits());
  if (z.to_double() < kBesselCrossover) return j1_maclaurin(z, ctx.bits());
  return j1_asymptotic(z, ctx);
}

LogRatio frac_log_ratio(const XValue& x, long a, const PrecisionContext& ctx) {
  LogRatio out{floor_log(a, x), BigReal(ctx.bits()), false};
  if (x.is_integer()) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a),
                  out.integer_part.get_ui());
    if (power == x.numerator()) {
      out.exact_power = true;
      return out;
    }
  }
  mpfr_prec_t wp = ctx.bits() + static_cast<mpfr_prec_t>(mpz_sizeinbase(
                                    out.integer_part.get_mpz_t(), 2)) + 16;
  BigReal ratio = log_of(x, wp);
  BigReal la(wp);
  mpfr_log_ui(la.raw(), static_cast<unsigned long>(a), MPFR_RNDN);
  ratio /= la;
  BigReal e(out.integer_part, wp);
  ratio -= e;
  // x is not a power of a, so the true fraction lies strictly inside (0, 1).
  if (ratio.sign() <= 0) {
    mpfr_set_ui_2exp(ratio.raw(), 1, -wp, MPFR_RNDN);
  } else if (!(ratio < 1)) {
    mpfr_set_ui(ratio.raw(), 1, MPFR_RNDN);
    mpfr_nextbelow(ratio.raw());
  }
  ratio.set_precision(ctx.bits());
  out.fraction = std::move(ratio);
  return out;
}

}  // namespace smooth
