#include "smooth/squares.hpp"

#include <numeric>

#include "smooth/errors.hpp"
#include "smooth/exact.hpp"

namespace smooth {

namespace {

// B1* of sqrt(log x / log a), taking the integer branch exactly when x = a^(p^2).
BigReal b1_of_root(const XValue& x, long a, const BigReal& root, const BigReal& tol,
                   const PrecisionContext& ctx) {
  LogRatio ratio = frac_log_ratio(x, a, ctx);
  if (ratio.exact_power && mpz_perfect_square_p(ratio.integer_part.get_mpz_t())) {
    return BigReal(0L, ctx.bits());
  }
  return b1_star(root, tol);
}

// sum_{k<=K} J1(2 pi k r) / k
BigReal single_bessel_sum(const BigReal& r, long K, const PrecisionContext& ctx) {
  BigReal step = r * ctx.pi();
  step *= 2;
  BigReal sum(ctx.bits());
  for (long k = 1; k <= K; ++k) {
    BigReal term = bessel_j1(step * k, ctx);
    term /= k;
    sum += term;
  }
  return sum;
}

}  // namespace

EvalReport n2_formula(long a, long b, const XValue& x, const SquaresTruncation& trunc,
                      const PrecisionContext& ctx) {
  if (a < 2 || b <= a || std::gcd(a, b) != 1) {
    throw DomainError("squares formula needs 2 <= a < b with gcd(a, b) = 1");
  }
  if (x.compare(1) <= 0) throw DomainError("squares formula is defined for x > 1 only");
  auto [N, M] = trunc.nm_cap;
  if (N < 1 || M < 1 || trunc.k_cap < 1) throw DomainError("squares caps must be >= 1");

  PrecisionContext work(escalated_digits(x, a, ctx.digits()));
  mpfr_prec_t bits = work.bits();
  const BigReal& pi = work.pi();
  BigReal l = log_of(x, bits);
  const BigReal& la = work.log_of(a);
  const BigReal& lb = work.log_of(b);
  BigReal ra = sqrt(l / la);
  BigReal rb = sqrt(l / lb);

  EvalReport rep{BigReal(bits), BigReal(bits), BigReal(bits), BigReal(bits), BigReal(bits),
                 0,             {N, M, trunc.k_cap}, {},   work.digits(), 0,
                 trunc.nm_cap};

  // pi L / (4 sqrt(la lb)) + (ra + rb) / 2 + 1/4
  rep.main_term = pi * l / (sqrt(la * lb) * 4);
  rep.main_term += (ra + rb) / 2;
  rep.main_term += BigReal(1L, bits) / 4;

  BigReal tol = integrality_tolerance(work);
  rep.bernoulli_terms -= b1_of_root(x, a, ra, tol, work) / 2;
  rep.bernoulli_terms -= b1_of_root(x, b, rb, tol, work) / 2;

  // Double series in increasing n + m, then n.
  BigReal two_pi = pi * 2;
  BigReal lab = la * lb;
  BigReal dbl(bits);
  for (long s = 2; s <= N + M; ++s) {
    for (long n = std::max(1L, s - M); n <= std::min(N, s - 1); ++n) {
      long m = s - n;
      BigReal q = la * (n * n);
      q += lb * (m * m);
      BigReal arg = sqrt(q / lab * l) * two_pi;
      dbl += bessel_j1(arg, work) / sqrt(q);
    }
  }
  dbl *= sqrt(l);
  rep.oscillatory = std::move(dbl);
  rep.oscillatory += ra * single_bessel_sum(rb, trunc.k_cap, work) / 2;
  rep.oscillatory += rb * single_bessel_sum(ra, trunc.k_cap, work) / 2;

  if (is_member_squares(x, a, b)) rep.chi_term = BigReal(1L, bits) / 2;
  rep.total = rep.main_term + rep.bernoulli_terms;
  rep.total += rep.oscillatory;
  rep.total += rep.chi_term;
  rep.rounded_count = round_to_integer(rep.total);
  return rep;
}

std::optional<long> first_rounding_cap(long a, long b, const XValue& x, long max_cap,
                                       long k_cap, const PrecisionContext& ctx) {
  mpz_class exact = count_squares_exact(a, b, x);
  for (long c = 1; c <= max_cap; ++c) {
    EvalReport rep = n2_formula(a, b, x, {{c, c}, k_cap}, ctx);
    if (rep.rounded_count == exact) return c;
  }
  return std::nullopt;
}

}  // namespace smooth
