#include <doctest.h>

#include "oracles.hpp"
#include "smooth/errors.hpp"
#include "smooth/exact.hpp"
#include "smooth/numerics.hpp"
#include "smooth/xvalue.hpp"

using namespace smooth;

namespace {

double rel_diff(const BigReal& a, const BigReal& b) {
  BigReal d = abs(a - b);
  if (b.is_zero()) return d.to_double();
  return (d / abs(b)).to_double();
}

BigReal lit(const char* s, mpfr_prec_t bits) { return BigReal::parse(s, bits); }

}  // namespace

TEST_CASE("precision context rejects fewer than 15 digits") {
  CHECK_THROWS_AS(PrecisionContext(14), DomainError);
  CHECK_NOTHROW(PrecisionContext(15));
  CHECK(PrecisionContext().digits() == 50);
}

TEST_CASE("hp_log matches the atanh series") {
  PrecisionContext ctx(30);
  BigReal ln2 = hp_log(2, ctx);
  CHECK(rel_diff(ln2, oracle::log_atanh(2, ctx.bits() + 64)) < 1e-28);
  CHECK(rel_diff(ln2, lit("0.693147180559945309417232121458", ctx.bits())) < 1e-29);
  CHECK_THROWS_AS(hp_log(1, ctx), DomainError);
}

TEST_CASE("hp_log obeys the log laws") {
  PrecisionContext ctx(50);
  double tol = 1e-48;
  CHECK(rel_diff(hp_log(4, ctx), hp_log(2, ctx) * 2L) < tol);
  CHECK(rel_diff(hp_log(6, ctx), hp_log(2, ctx) + hp_log(3, ctx)) < tol);
}

TEST_CASE("cached constants survive recomputation at digits + 10") {
  PrecisionContext ctx(50);
  PrecisionContext wide(60);
  for (long n = 2; n <= 60; ++n) {
    CHECK(rel_diff(ctx.log_of(n), wide.log_of(n)) < 1e-48);
    CHECK(&ctx.log_of(n) == &ctx.log_of(n));
  }
  CHECK(rel_diff(ctx.pi(), oracle::pi(400)) < 1e-48);
}

TEST_CASE("hp_sincos at reference angles") {
  PrecisionContext ctx(40);
  double tol = 1e-38;
  SUBCASE("zero") {
    SinCos r = hp_sincos(BigReal(0L, ctx.bits()), ctx);
    CHECK(r.sin.is_zero());
    CHECK(rel_diff(r.cos, BigReal(1L, ctx.bits())) < tol);
  }
  SUBCASE("pi") {
    SinCos r = hp_sincos(ctx.pi(), ctx);
    CHECK(abs(r.sin).to_double() < tol);
    CHECK(rel_diff(r.cos, BigReal(-1L, ctx.bits())) < tol);
  }
  SUBCASE("a million turns plus a quarter") {
    // The angle is built from pi at twice the precision, then rounded.
    BigReal p = oracle::pi(2 * ctx.bits());
    BigReal theta = p * 2000000L + p / 2;
    SinCos r = hp_sincos(theta.at_precision(ctx.bits() + 24), ctx);
    CHECK(rel_diff(r.sin, BigReal(1L, ctx.bits())) < 1e-30);
    CHECK(abs(r.cos).to_double() < 1e-30);
  }
}

TEST_CASE("sincos_turns depends only on the fractional turn") {
  PrecisionContext ctx(40);
  SinCos quarter = sincos_turns(lit("12345.25", ctx.bits()), ctx);
  CHECK(rel_diff(quarter.sin, BigReal(1L, ctx.bits())) < 1e-38);
  CHECK(abs(quarter.cos).to_double() < 1e-38);
  SinCos eighth = sincos_turns(lit("-3.875", ctx.bits()), ctx);
  CHECK(rel_diff(eighth.sin, eighth.cos) < 1e-38);
}

TEST_CASE("b1_star") {
  PrecisionContext ctx(30);
  BigReal tol = integrality_tolerance(ctx);
  mpfr_prec_t b = ctx.bits();
  CHECK(rel_diff(b1_star(lit("2.25", b), tol), lit("-0.25", b)) < 1e-28);
  CHECK(b1_star(BigReal(3L, b), tol).is_zero());
  CHECK(rel_diff(b1_star(lit("0.9", b), tol), lit("0.4", b)) < 1e-28);
  CHECK(b1_star(lit("4.0000000000000000000001", b), tol).is_zero());
  CHECK(b1_star(lit("3.9999999999999999999999", b), tol).is_zero());
}

TEST_CASE("b2_frac") {
  PrecisionContext ctx(30);
  mpfr_prec_t b = ctx.bits();
  BigReal sixth = BigReal(1L, b) / 6;
  BigReal minus_twelfth = BigReal(-1L, b) / 12;
  CHECK(rel_diff(b2_frac(BigReal(0L, b)), sixth) < 1e-28);
  CHECK(rel_diff(b2_frac(lit("0.5", b)), minus_twelfth) < 1e-28);
  CHECK(rel_diff(b2_frac(lit("7.5", b)), minus_twelfth) < 1e-28);
}

TEST_CASE("bessel_j1 reference values") {
  PrecisionContext ctx(30);
  mpfr_prec_t b = ctx.bits();
  CHECK(bessel_j1(BigReal(0L, b), ctx).is_zero());
  BigReal one = bessel_j1(BigReal(1L, b), ctx);
  CHECK(rel_diff(one, oracle::j1_maclaurin(BigReal(1L, b), 300)) < 1e-25);
  CHECK(rel_diff(one, lit("0.4400505857449335", b)) < 1e-15);
  BigReal hundred(100L, b);
  BigReal want = oracle::j1_maclaurin(hundred, bits_for_digits(60));
  CHECK(rel_diff(bessel_j1(hundred, ctx), want) < 1e-10);
  CHECK_THROWS_AS(bessel_j1(BigReal(-1L, b), ctx), DomainError);
}

TEST_CASE("frac_log_ratio") {
  PrecisionContext ctx(30);
  SUBCASE("exact power") {
    LogRatio r = frac_log_ratio(XValue::integer(8), 2, ctx);
    CHECK(r.integer_part == 3);
    CHECK(r.fraction.is_zero());
    CHECK(r.exact_power);
  }
  SUBCASE("log2 10") {
    LogRatio r = frac_log_ratio(XValue::integer(10), 2, ctx);
    CHECK(r.integer_part == 3);
    CHECK_FALSE(r.exact_power);
    mpfr_prec_t wide = ctx.bits() + 64;
    BigReal want = oracle::log_atanh(10, wide) / oracle::log_atanh(2, wide) - BigReal(3L, wide);
    CHECK(rel_diff(r.fraction, want) < 1e-28);
    CHECK(rel_diff(r.fraction, lit("0.321928094887362347", ctx.bits())) < 1e-17);
  }
  SUBCASE("googol base 3") {
    LogRatio r = frac_log_ratio(XValue::power_of_ten(100), 3, ctx);
    CHECK(r.integer_part == 209);
    mpz_class lo, hi, googol;
    mpz_ui_pow_ui(lo.get_mpz_t(), 3, 209);
    mpz_ui_pow_ui(hi.get_mpz_t(), 3, 210);
    mpz_ui_pow_ui(googol.get_mpz_t(), 10, 100);
    CHECK(lo <= googol);
    CHECK(googol < hi);
  }
  SUBCASE("fraction keeps its digits at 10^1000") {
    PrecisionContext wide(60);
    LogRatio r = frac_log_ratio(XValue::power_of_ten(1000), 3, ctx);
    LogRatio w = frac_log_ratio(XValue::power_of_ten(1000), 3, wide);
    CHECK(r.integer_part == w.integer_part);
    CHECK(rel_diff(r.fraction, w.fraction) < 1e-28);
  }
}
