#include "smooth/exact.hpp"

#include "smooth/errors.hpp"
#include "smooth/numerics.hpp"

namespace smooth {

namespace {

// log2(base) when base is a power of two, else 0.
unsigned long binary_exponent(long base) {
  if ((base & (base - 1)) != 0) return 0;
  unsigned long s = 0;
  while ((1L << s) < base) ++s;
  return s;
}

mpz_class power(long base, unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), e);
  return p;
}

}  // namespace

unsigned long floor_log(long base, const mpz_class& y) {
  if (base < 2) throw DomainError("floor_log base must be >= 2");
  if (y < 1) throw DomainError("floor_log argument must be >= 1");
  if (unsigned long s = binary_exponent(base)) {
    return (mpz_sizeinbase(y.get_mpz_t(), 2) - 1) / s;
  }
  // GMP's digit count is exact or one too large, which brackets e within two
  // candidates; one exact power settles it.
  if (base > 62) return floor_log_by_search(base, y);
  unsigned long digits = mpz_sizeinbase(y.get_mpz_t(), static_cast<int>(base));
  unsigned long e = digits - 1;
  if (e > 0 && power(base, e) > y) --e;
  return e;
}

unsigned long floor_log_by_search(long base, const mpz_class& y) {
  if (y < base) return 0;
  unsigned long hi = 1;
  while (power(base, hi) <= y) hi *= 2;
  unsigned long lo = hi / 2;  // base^lo <= y < base^hi
  while (hi - lo > 1) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (power(base, mid) <= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

unsigned long floor_log(long base, const XValue& x, const mpz_class& divisor) {
  if (divisor < 1) throw DomainError("divisor must be positive");
  if (x.compare(divisor) < 0) throw DivisorExceedsX();
  mpz_class y;
  mpz_class scaled = x.denominator() * divisor;
  mpz_fdiv_q(y.get_mpz_t(), x.numerator().get_mpz_t(), scaled.get_mpz_t());
  return floor_log(base, y);
}

namespace {

mpz_class count_below(const mpz_class& y, const std::vector<long>& a, std::size_t top) {
  if (top == 0) return floor_log(a[0], y) + 1;
  mpz_class total = 0;
  mpz_class rest = y;
  // floor(floor(y / a^k) / a) = floor(y / a^(k+1)), so one exact division per step.
  while (rest >= 1) {
    total += count_below(rest, a, top - 1);
    mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(a[top]));
  }
  return total;
}

}  // namespace

mpz_class count_smooth(const Basis& basis, const XValue& x) {
  return count_below(x.floor(), basis.elements(), basis.size() - 1);
}

mpz_class count_squares_exact(long a, long b, const XValue& x) {
  mpz_class y = x.floor();
  mpz_class total = 0;
  mpz_class b_power = 1;  // b^(q^2)
  for (unsigned long q = 0; b_power <= y; ++q) {
    mpz_class rest = y / b_power;
    mpz_class root;
    mpz_class e = floor_log(a, rest);
    mpz_sqrt(root.get_mpz_t(), e.get_mpz_t());
    total += root + 1;
    b_power *= power(b, 2 * q + 1);
  }
  return total;
}

namespace {

constexpr mpfr_prec_t kStreamBits = 192;

}  // namespace

SmoothStream::SmoothStream(const Basis& basis, const XValue& limit)
    : elements_(basis.elements()),
      limit_(limit.floor()),
      tolerance_(BigReal::from_double(1e-30, kStreamBits)),
      heap_(Later{this}) {
  for (long a : elements_) {
    BigReal l(kStreamBits);
    mpfr_log_ui(l.raw(), static_cast<unsigned long>(a), MPFR_RNDN);
    logs_.push_back(std::move(l));
  }
  heap_.push(Candidate{BigReal(0L, kStreamBits),
                       std::vector<unsigned long>(elements_.size(), 0), 0});
}

mpz_class SmoothStream::value_of(const std::vector<unsigned long>& exponents) const {
  mpz_class v = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i]) v *= power(elements_[i], exponents[i]);
  }
  return v;
}

bool SmoothStream::Later::operator()(const Candidate& a, const Candidate& b) const {
  BigReal diff = a.log_value - b.log_value;
  if (abs(diff) > self->tolerance_) return diff.sign() > 0;
  int c = cmp(self->value_of(a.exponents), self->value_of(b.exponents));
  if (c != 0) return c > 0;
  return a.exponents > b.exponents;
}

std::optional<mpz_class> SmoothStream::next() {
  while (!heap_.empty()) {
    Candidate top = heap_.top();
    heap_.pop();
    mpz_class value = value_of(top.exponents);
    if (value > limit_) continue;
    for (std::size_t j = top.last; j < elements_.size(); ++j) {
      Candidate child{top.log_value + logs_[j], top.exponents, j};
      ++child.exponents[j];
      if (value * elements_[j] <= limit_) heap_.push(std::move(child));
    }
    // Dependent bases (relaxed validation) reach some values twice.
    if (last_ && *last_ == value) continue;
    last_ = value;
    return value;
  }
  return std::nullopt;
}

SmoothStream generate_smooth(const Basis& basis, const XValue& limit) {
  return SmoothStream(basis, limit);
}

}  // namespace smooth
