#include "smooth/bigreal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace smooth {

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, mpfr_prec_t bits) {
  BigReal r(bits);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

BigReal BigReal::from_double(double value, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

void BigReal::set_precision(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

BigReal BigReal::at_precision(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

// Grows the target so that the result of a binary op is held at the wider
// operand precision.
void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(v_, rhs.v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(v_, rhs.v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(v_, rhs.v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(v_, rhs.v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string BigReal::to_scientific(int significant) const {
  significant = std::max(significant, 1);
  std::string fmt = "%." + std::to_string(significant - 1) + "Re";
  char* out = nullptr;
  mpfr_asprintf(&out, fmt.c_str(), v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigReal abs(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal frac(const BigReal& x) {
  // mpfr_frac rounds toward zero for negatives; fold to [0, 1) by hand.
  BigReal fl = floor(x);
  BigReal r(x.precision());
  mpfr_sub(r.raw(), x.raw(), fl.raw(), MPFR_RNDN);
  return r;
}

mpz_class round_to_integer(const BigReal& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDN);
  return z;
}

mpz_class floor_to_integer(const BigReal& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDD);
  return z;
}

BigReal pow10(long e, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace smooth
