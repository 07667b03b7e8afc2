#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "smooth/analytic.hpp"
#include "smooth/errors.hpp"
#include "smooth/exact.hpp"
#include "smooth/laurent.hpp"
#include "smooth/numerics.hpp"

using namespace smooth;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

double rel(const BigReal& a, const BigReal& b) {
  BigReal d = abs(a - b);
  return b.is_zero() ? d.to_double() : (d / abs(b)).to_double();
}

// A strictly valid ascending basis of size n drawn from small integers.
std::vector<long> random_basis(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> pick(2, 40);
  while (true) {
    std::vector<long> v;
    while (v.size() < n) {
      long a = pick(rng);
      if (std::find(v.begin(), v.end(), a) == v.end()) v.push_back(a);
    }
    std::sort(v.begin(), v.end());
    if (check_basis(v).empty()) return v;
  }
}

}  // namespace

TEST_CASE("sign-pattern identities") {
  std::mt19937_64 rng(kSeed);
  mpfr_prec_t bits = bits_for_digits(50);
  for (std::size_t n = 1; n <= 8; ++n) {
    BigReal pow2(static_cast<long>(1L << n), bits);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<BigReal> x;
      for (std::size_t k = 0; k < n; ++k) x.push_back(oracle::random_real(rng, -5, 5, bits));
      oracle::SignSums s = oracle::sign_pattern_sums(x, bits);
      BigReal prod = pow2;
      for (const auto& v : x) prod *= v;
      CHECK(rel(s.s1, pow2) < 1e-40);
      CHECK(rel(s.s2, prod) < 1e-40);
    }
  }
}

TEST_CASE("generating-function coefficients are B_j / j!") {
  mpfr_prec_t bits = bits_for_digits(40);
  auto beta = bernoulli_gf_coefficients(8, bits);
  const char* want[] = {"1", "0.5", "0.0833333333333333333333333333333333333333333",
                        "0", "-0.00138888888888888888888888888888888888888889",
                        "0", "0.0000330687830687830687830687830687830687830688",
                        "0", "-8.26719576719576719576719576719576719576720e-7"};
  for (int j = 0; j <= 8; ++j) {
    CHECK(abs(beta[j] - BigReal::parse(want[j], bits)).to_double() < 1e-40);
  }
}

TEST_CASE("residue engine agrees with the printed polynomials on random inputs") {
  std::mt19937_64 rng(kSeed + 1);
  PrecisionContext ctx(40);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<long> small_x(1, 1000000000000L);
  std::uniform_int_distribution<long> exponent(1, 60);
  for (int trial = 0; trial < 50; ++trial) {
    Basis b = validate_basis(random_basis(rng, size(rng)));
    XValue x = trial % 2 ? XValue::integer(small_x(rng)) : XValue::power_of_ten(exponent(rng));
    BigReal r = residue_main_term(b, x, ctx);
    BigReal t = transcribed_main_term(b, x, ctx);
    CHECK(rel(r, t) < 1e-35);
  }
}

TEST_CASE("generated members agree with counts") {
  for (auto bases : std::vector<std::vector<long>>{{2, 3}, {2, 3, 5}, {3, 5, 7}}) {
    Basis b = validate_basis(bases);
    SmoothStream s(b, XValue::integer(100000));
    long index = 0;
    mpz_class last = 0;
    while (auto v = s.next()) {
      ++index;
      CHECK(*v > last);
      last = *v;
      CHECK(count_smooth(b, XValue::integer(*v)) == index);
      CHECK(count_smooth(b, XValue::integer(*v - 1 > 0 ? mpz_class(*v - 1) : 1)) ==
            (*v == 1 ? 1 : index - 1));
    }
    CHECK(count_smooth(b, XValue::integer(100000)) == index);
  }
}

TEST_CASE("membership is the jump of the count") {
  Basis b = validate_basis({2, 3, 5});
  mpz_class prev = count_smooth(b, XValue::integer(1));
  for (long x = 2; x <= 10000; ++x) {
    mpz_class cur = count_smooth(b, XValue::integer(x));
    CHECK(cur - prev == (is_member(XValue::integer(x), b) ? 1 : 0));
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("counts ignore input order") {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<long> exponent(1, 200);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> v = random_basis(rng, 4);
    XValue x = XValue::power_of_ten(exponent(rng));
    mpz_class want = count_smooth(validate_basis(v), x);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(count_smooth(validate_unsorted(v), x) == want);
    CHECK(is_member(XValue::integer(v[0] * v[1]), validate_unsorted(v)));
  }
}

TEST_CASE("floor_log brackets its argument") {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<long> base(2, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    mpz_class y;
    mpz_class scale = 1;
    scale <<= static_cast<mp_bitcnt_t>(rng() % 3000);
    y = scale + mpz_class(static_cast<unsigned long>(rng() >> 1));
    long a = base(rng);
    unsigned long k = floor_log(a, y);
    mpz_class lo, hi;
    mpz_ui_pow_ui(lo.get_mpz_t(), static_cast<unsigned long>(a), k);
    mpz_ui_pow_ui(hi.get_mpz_t(), static_cast<unsigned long>(a), k + 1);
    CHECK(lo <= y);
    CHECK(y < hi);
  }
}

TEST_CASE("exponent vectors multiply back to the element") {
  for (long n = 2; n <= 5000; ++n) {
    long prod = 1;
    for (auto [p, e] : factorize(n)) {
      for (long d = 2; d * d <= p; ++d) CHECK(p % d != 0);
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("periodic Bernoulli functions") {
  std::mt19937_64 rng(kSeed + 4);
  PrecisionContext ctx(40);
  mpfr_prec_t bits = ctx.bits();
  BigReal tol = integrality_tolerance(ctx);
  std::uniform_int_distribution<long> shift(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    BigReal t = oracle::random_real(rng, -20, 20, bits);
    BigReal moved = t + BigReal(shift(rng), bits);
    CHECK(abs(b1_star(moved, tol) - b1_star(t, tol)).to_double() < 1e-30);
    CHECK(abs(b1_star(-t, tol) + b1_star(t, tol)).to_double() < 1e-30);
    CHECK(abs(b2_frac(moved) - b2_frac(t)).to_double() < 1e-30);
    CHECK(abs(b2_frac(-t) - b2_frac(t)).to_double() < 1e-30);
    CHECK(abs(b1_star(t, tol)).to_double() <= 0.5);
  }
}

TEST_CASE("sin^2 + cos^2 = 1") {
  std::mt19937_64 rng(kSeed + 5);
  PrecisionContext ctx(50);
  BigReal one(1L, ctx.bits());
  for (int trial = 0; trial < 1000; ++trial) {
    BigReal theta = oracle::random_real(rng, -1e6, 1e6, ctx.bits());
    SinCos r = hp_sincos(theta, ctx);
    CHECK(abs(r.sin * r.sin + r.cos * r.cos - one).to_double() < 1e-48);
  }
}

TEST_CASE("bessel_j1 against the power series on [0, 50]") {
  std::mt19937_64 rng(kSeed + 6);
  PrecisionContext ctx(30);
  mpfr_prec_t wide = bits_for_digits(90);
  for (int trial = 0; trial < 200; ++trial) {
    BigReal z = oracle::random_real(rng, 0, 50, ctx.bits());
    BigReal got = bessel_j1(z, ctx);
    CHECK(abs(got).to_double() <= 1.0);
    CHECK(abs(got - oracle::j1_maclaurin(z, wide)).to_double() < 1e-10);
  }
}

TEST_CASE("frac_log_ratio integer part is floor_log") {
  std::mt19937_64 rng(kSeed + 7);
  PrecisionContext ctx(30);
  std::uniform_int_distribution<long> base(2, 500);
  std::uniform_int_distribution<long> exponent(1, 3000);
  std::uniform_int_distribution<long> small(1, 1000000000L);
  for (int trial = 0; trial < 500; ++trial) {
    long a = base(rng);
    XValue x = trial % 2 ? XValue::integer(small(rng)) : XValue::power_of_ten(exponent(rng));
    LogRatio r = frac_log_ratio(x, a, ctx);
    CHECK(r.integer_part == floor_log(a, x));
    CHECK(r.fraction.is_zero() == r.exact_power);
    CHECK_FALSE(r.fraction < 0);
    CHECK(r.fraction < 1);
  }
}
