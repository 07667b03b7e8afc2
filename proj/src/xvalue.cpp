#include "smooth/xvalue.hpp"

#include <cctype>
#include <charconv>

#include "smooth/errors.hpp"

namespace smooth {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_natural(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("malformed x: '" + std::string(whole) + "'");
  return mpz_class(std::string(s), 10);
}

}  // namespace

XValue XValue::integer(const mpz_class& v) {
  if (v < 1) throw DomainError("x must be >= 1");
  XValue x;
  x.num_ = v;
  return x;
}

XValue XValue::power_of_ten(unsigned long e) {
  if (e > kMaxExponent) throw DomainError("exponent too large for 10^E");
  XValue x;
  x.form_ = Form::PowerOfTen;
  x.exponent_ = e;
  mpz_ui_pow_ui(x.num_.get_mpz_t(), 10, e);
  return x;
}

XValue XValue::rational(const mpz_class& p, const mpz_class& q) {
  if (q <= 0) throw DomainError("denominator must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class num = p / g;
  mpz_class den = q / g;
  if (num < den) throw DomainError("x must be >= 1");
  if (den == 1) return integer(num);
  XValue x;
  x.form_ = Form::Rational;
  x.num_ = num;
  x.den_ = den;
  return x;
}

XValue XValue::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty x");
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    if (text.substr(0, e) != "1") {
      throw ParseError("only 1e<E> is accepted in exponent form: '" + std::string(text) + "'");
    }
    std::string_view digits = text.substr(e + 1);
    if (!all_digits(digits)) throw ParseError("malformed exponent in '" + std::string(text) + "'");
    unsigned long exp = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
    if (ec != std::errc() || exp > kMaxExponent) {
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    }
    return power_of_ten(exp);
  }
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return rational(parse_natural(text.substr(0, slash), text),
                      parse_natural(text.substr(slash + 1), text));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view fraction = text.substr(dot + 1);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
      mpz_class num = parse_natural(whole, text) * scale +
                      (fraction.empty() ? mpz_class(0) : parse_natural(fraction, text));
      return rational(num, scale);
    }
    return integer(parse_natural(text, text));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

mpz_class XValue::floor() const {
  if (den_ == 1) return num_;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

int XValue::compare(const mpz_class& v) const {
  if (den_ == 1) return cmp(num_, v);
  return cmp(num_, v * den_) > 0 ? 1 : -1;
}

std::string XValue::to_string() const {
  switch (form_) {
    case Form::PowerOfTen:
      return "1e" + std::to_string(exponent_);
    case Form::Rational:
      return num_.get_str() + "/" + den_.get_str();
    case Form::Integer:
      break;
  }
  return num_.get_str();
}

}  // namespace smooth
