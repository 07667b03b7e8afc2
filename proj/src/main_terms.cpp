#include "smooth/analytic.hpp"
#include "smooth/errors.hpp"
#include "smooth/laurent.hpp"

namespace smooth {

BigReal residue_main_term(const Basis& basis, const XValue& x, const PrecisionContext& ctx) {
  int n = static_cast<int>(basis.size());
  BigReal l = log_of(x, ctx.bits());
  LaurentSeries series = LaurentSeries::exponential(l, n);
  BigReal scale(1L, ctx.bits());
  for (long a : basis.elements()) {
    const BigReal& t = ctx.log_of(a);
    series = series * LaurentSeries::bernoulli_gf(t, n);
    scale /= t;
  }
  series *= scale;
  // x^s / (s prod(1 - a^-s)) = s^-(n+1) e^(Ls) prod g(t_k s) / prod t_k
  std::vector<BigReal> c;
  for (int j = 0; j <= n; ++j) c.push_back(series.coefficient(j));
  return LaurentSeries(std::move(c), n + 1).residue();
}

namespace {

BigReal main_single(const BigReal& l, const BigReal& a) {
  BigReal r = l / a;
  BigReal half(1L, l.precision());
  half /= 2;
  return r + half;
}

// 1/2 log(ax) log(bx) / (log a log b) + log a / (12 log b) + log b / (12 log a) - 1/4
BigReal main_pair(const BigReal& l, const BigReal& a, const BigReal& b) {
  BigReal r = (a + l) * (b + l);
  r /= a * b;
  r /= 2;
  BigReal t = a / b;
  t /= 12;
  r += t;
  t = b / a;
  t /= 12;
  r += t;
  BigReal quarter(1L, l.precision());
  quarter /= 4;
  return r - quarter;
}

BigReal main_triple(const BigReal& l, const std::vector<BigReal>& t) {
  mpfr_prec_t bits = l.precision();
  BigReal l2 = l * l;
  BigReal l3 = l2 * l;
  BigReal r = l3 / (t[0] * t[1] * t[2]);
  r /= 6;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) r += l2 / (t[i] * t[j] * 4);
  }
  for (int i = 0; i < 3; ++i) r += l / (t[i] * 4);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int k = (i + 2) % 3;
    r += t[i] * l / (t[j] * t[k] * 12);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) r += t[i] / (t[j] * 24);
    }
  }
  BigReal eighth(1L, bits);
  eighth /= 8;
  return r + eighth;
}

BigReal main_quad(const BigReal& l, const std::vector<BigReal>& t) {
  mpfr_prec_t bits = l.precision();
  BigReal l2 = l * l;
  BigReal l3 = l2 * l;
  BigReal l4 = l3 * l;
  BigReal all = t[0] * t[1] * t[2] * t[3];
  BigReal r = l4 / (all * 24);
  // the product of every element but i
  auto without = [&](int i) {
    BigReal p(1L, bits);
    for (int j = 0; j < 4; ++j) {
      if (j != i) p *= t[j];
    }
    return p;
  };
  for (int i = 3; i >= 0; --i) r += l3 / (without(i) * 12);
  for (int i = 0; i < 4; ++i) r += t[i] * l2 / (without(i) * 24);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) r += l2 / (t[i] * t[j] * 8);
  }
  for (int i = 0; i < 4; ++i) r += l / (t[i] * 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (j != i && k != i) r += t[i] * l / (t[j] * t[k] * 24);
      }
    }
  }
  BigReal sixteenth(1L, bits);
  sixteenth /= 16;
  r += sixteenth;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) r += t[i] / (t[j] * 48);
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      BigReal rest = all / (t[i] * t[j]);
      r += t[i] * t[j] / (rest * 144);
    }
  }
  for (int i = 0; i < 4; ++i) r -= t[i] * t[i] * t[i] / (without(i) * 720);
  return r;
}

}  // namespace

BigReal transcribed_main_term(const Basis& basis, const XValue& x, const PrecisionContext& ctx) {
  BigReal l = log_of(x, ctx.bits());
  std::vector<BigReal> t;
  for (long a : basis.elements()) t.push_back(ctx.log_of(a));
  switch (basis.size()) {
    case 1:
      return main_single(l, t[0]);
    case 2:
      return main_pair(l, t[0], t[1]);
    case 3:
      return main_triple(l, t);
    case 4:
      return main_quad(l, t);
    default:
      throw ArityMismatch("no transcribed main term for n = " + std::to_string(basis.size()));
  }
}

}  // namespace smooth
