#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smooth {

// An exactly represented evaluation point x >= 1.
class XValue {
 public:
  enum class Form { Integer, PowerOfTen, Rational };

  // Largest E accepted for 10^E.
  static constexpr unsigned long kMaxExponent = 10'000'000;

  static XValue integer(const mpz_class& v);
  static XValue power_of_ten(unsigned long e);
  // Reduced to lowest terms; an integral quotient becomes Form::Integer.
  static XValue rational(const mpz_class& p, const mpz_class& q);

  // "123", "1e100" (exactly 10^100), "11/10", or a decimal fraction "1.1".
  static XValue parse(std::string_view text);

  Form form() const { return form_; }
  unsigned long exponent() const { return exponent_; }
  bool is_integer() const { return form_ != Form::Rational; }
  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  mpz_class floor() const;

  // Sign of (x - v) for an integer v.
  int compare(const mpz_class& v) const;

  // The text form accepted by parse.
  std::string to_string() const;

  friend bool operator==(const XValue& a, const XValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  XValue() = default;

  Form form_ = Form::Integer;
  unsigned long exponent_ = 0;
  mpz_class num_ = 1;
  mpz_class den_ = 1;
};

}  // namespace smooth
