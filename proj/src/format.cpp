#include "smooth/format.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace smooth {

std::string to_fixed(const BigReal& v, int places) {
  if (!v.is_finite()) throw std::domain_error("cannot format a non-finite value");
  if (places < 0) places = 0;
  if (v.is_zero()) return places > 0 ? "0." + std::string(static_cast<std::size_t>(places), '0') : "0";
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v.raw());
  // v * 10^places = mant * 2^e * 10^places, scaled to an integer quotient.
  mpz_class num = mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  num *= scale;
  mpz_class den = 1;
  if (e >= 0) {
    num <<= static_cast<mp_bitcnt_t>(e);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-e);
  }
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int c = cmp(2 * r, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

  std::string digits = q.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out = "-";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

std::string to_fixed_significant(const BigReal& v, int significant) {
  BigReal a = abs(v);
  int integer_digits = 1;
  if (!(a < 1L)) {
    mpz_class whole = floor_to_integer(a);
    integer_digits = static_cast<int>(whole.get_str().size());
  }
  return to_fixed(v, std::max(0, significant - integer_digits));
}

}  // namespace smooth
