#include "oscillatory.hpp"

#include <cmath>
#include <exception>
#include <thread>

#include "smooth/errors.hpp"

namespace smooth::detail {

namespace {

// Everything one pole family needs; built before any worker starts.
struct Family {
  int m;
  long cap;
  BigReal u;                     // frac(log x / log a_m)
  std::vector<BigReal> half_rho;  // log a_i / (2 log a_m), i != m, ascending i
};

struct FamilyResult {
  BigReal sum;
  std::vector<ResonanceWarning> warnings;
  std::exception_ptr error;
};

struct Angles {
  const BigReal& s;  // sin theta
  const BigReal& c;  // cos theta
  const std::vector<BigReal>& sn;
  const std::vector<BigReal>& cs;
  const std::vector<BigReal>& cot;
};

// cos(theta - phi_j) / sin(phi_j)
BigReal shifted_cos(const Angles& a, std::size_t j) {
  BigReal r = a.c * a.cs[j];
  r += a.s * a.sn[j];
  r /= a.sn[j];
  return r;
}

// [sin(theta + phi_i - phi_j) + sin(theta - phi_i + phi_j)] / (sin phi_i sin phi_j)
BigReal sine_pair(const Angles& a, std::size_t i, std::size_t j) {
  BigReal cos_d = a.cs[i] * a.cs[j];
  cos_d += a.sn[i] * a.sn[j];
  BigReal sin_d = a.sn[i] * a.cs[j];
  sin_d -= a.cs[i] * a.sn[j];
  BigReal plus = a.s * cos_d;
  plus += a.c * sin_d;
  BigReal minus = a.s * cos_d;
  minus -= a.c * sin_d;
  plus += minus;
  plus /= a.sn[i] * a.sn[j];
  return plus;
}

// The bracket multiplying 1/(pi k) in one family's k-th term.
BigReal family_term(FormulaVariant v, const Angles& a, std::size_t n) {
  mpfr_prec_t bits = a.s.precision();
  std::size_t o = a.sn.size();
  BigReal r(bits);
  switch (v) {
    case FormulaVariant::HL2:
      r = shifted_cos(a, 0);
      r /= -2;
      break;
    case FormulaVariant::HL2Cot:
      r = a.c * a.cot[0];
      r /= -2;
      break;
    case FormulaVariant::Triple: {
      for (std::size_t j = 0; j < o; ++j) r += shifted_cos(a, j);
      r /= -4;
      BigReal pair = sine_pair(a, 0, 1);
      pair /= 8;
      r -= pair;
      break;
    }
    case FormulaVariant::TripleCot: {
      for (std::size_t j = 0; j < o; ++j) r += a.c * a.cot[j];
      r += a.s * a.cot[0] * a.cot[1];
      r /= -4;
      break;
    }
    case FormulaVariant::Quad: {
      for (std::size_t j = 0; j < o; ++j) r += shifted_cos(a, j);
      r /= -8;
      BigReal pairs(bits);
      for (std::size_t i = 0; i < o; ++i) {
        for (std::size_t j = i + 1; j < o; ++j) pairs += sine_pair(a, i, j);
      }
      pairs /= 16;
      r -= pairs;
      BigReal triple = a.c * a.cot[0] * a.cot[1] * a.cot[2];
      triple /= 8;
      r += triple;
      break;
    }
    case FormulaVariant::QuadCot: {
      for (std::size_t j = 0; j < o; ++j) r += a.c * a.cot[j];
      for (std::size_t i = 0; i < o; ++i) {
        for (std::size_t j = i + 1; j < o; ++j) r += a.s * a.cot[i] * a.cot[j];
      }
      r -= a.c * a.cot[0] * a.cot[1] * a.cot[2];
      r /= -8;
      break;
    }
    case FormulaVariant::GeneralCot: {
      // Sum over r-subsets of cot products = elementary symmetric e_r(cot).
      std::vector<BigReal> e(o + 1, BigReal(bits));
      e[0] = BigReal(1L, bits);
      for (std::size_t j = 0; j < o; ++j) {
        for (std::size_t q = j + 1; q >= 1; --q) e[q] += e[q - 1] * a.cot[j];
      }
      for (std::size_t q = 1; q + 1 <= n; ++q) {
        // sin(theta - pi q / 2)
        switch (q % 4) {
          case 0: r += e[q] * a.s; break;
          case 1: r -= e[q] * a.c; break;
          case 2: r -= e[q] * a.s; break;
          default: r += e[q] * a.c; break;
        }
      }
      mpfr_div_2ui(r.raw(), r.raw(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
      break;
    }
    default:
      throw std::logic_error("variant has no single-sum oscillatory series");
  }
  return r;
}

// cos and sin of 2 pi k t for k = 1, 2, ..., advanced by one rotation per
// step and reseeded from sincos_turns every kReseed steps.
class Rotor {
 public:
  static constexpr long kReseed = 256;

  Rotor(const BigReal& t, const PrecisionContext& ctx)
      : t_(t), ctx_(ctx), turns_(t.precision() + 40) {
    SinCos one = sincos_turns(t, ctx);
    c1_ = std::move(one.cos);
    s1_ = std::move(one.sin);
    c_ = c1_;
    s_ = s1_;
  }

  const BigReal& cos() const { return c_; }
  const BigReal& sin() const { return s_; }

  void advance_to(long k) {
    if (k % kReseed == 0) {
      mpfr_mul_ui(turns_.raw(), t_.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
      SinCos exact = sincos_turns(turns_, ctx_);
      c_ = std::move(exact.cos);
      s_ = std::move(exact.sin);
      return;
    }
    BigReal c = c_ * c1_;
    c -= s_ * s1_;
    BigReal s = s_ * c1_;
    s += c_ * s1_;
    c_ = std::move(c);
    s_ = std::move(s);
  }

 private:
  const BigReal& t_;
  const PrecisionContext& ctx_;
  BigReal turns_;
  BigReal c1_, s1_, c_, s_;
};

FamilyResult family_sum(FormulaVariant v, const Family& f, std::size_t n,
                        const PrecisionContext& phase, double warn, double fail) {
  mpfr_prec_t bits = phase.bits();
  FamilyResult out{BigReal(bits), {}, nullptr};
  std::size_t o = f.half_rho.size();
  std::vector<BigReal> cot(o, BigReal(bits));
  Rotor theta(f.u, phase);
  std::vector<Rotor> phis;
  for (const auto& h : f.half_rho) phis.emplace_back(h, phase);
  std::vector<BigReal> sn(o, BigReal(bits));
  std::vector<BigReal> cs(o, BigReal(bits));
  for (long k = 1; k <= f.cap; ++k) {
    if (k > 1) {
      theta.advance_to(k);
      for (auto& r : phis) r.advance_to(k);
    }
    for (std::size_t j = 0; j < o; ++j) {
      double mag = std::fabs(phis[j].sin().to_double());
      if (mag < fail) throw ResonantDenominator(f.m, k, mag);
      if (mag < warn) out.warnings.push_back({f.m, k, mag});
      sn[j] = phis[j].sin();
      cs[j] = phis[j].cos();
      mpfr_div(cot[j].raw(), cs[j].raw(), sn[j].raw(), MPFR_RNDN);
    }
    BigReal term = family_term(v, Angles{theta.sin(), theta.cos(), sn, cs, cot}, n);
    term /= k;
    out.sum += term;
  }
  return out;
}

}  // namespace

OscillatorySum oscillatory_sum(FormulaVariant variant, const Basis& basis, const XValue& x,
                               double R, unsigned jobs, const PrecisionContext& ctx) {
  std::size_t n = basis.size();
  // Headroom for k up to ~10^6 multiplying the phase fractions.
  PrecisionContext phase(ctx.digits() + 10);
  mpfr_prec_t bits = phase.bits();

  std::vector<BigReal> logs;
  for (long a : basis.elements()) {
    BigReal l(bits);
    mpfr_log_ui(l.raw(), static_cast<unsigned long>(a), MPFR_RNDN);
    logs.push_back(std::move(l));
  }
  BigReal r_value = BigReal::from_double(R, bits);

  std::vector<Family> families;
  for (std::size_t m = 0; m < n; ++m) {
    Family f{static_cast<int>(m), 0, BigReal(bits), {}};
    f.cap = floor_to_integer(r_value * logs[m]).get_si();
    LogRatio ratio = frac_log_ratio(x, basis[m], phase);
    f.u = std::move(ratio.fraction);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == m) continue;
      BigReal h = logs[i] / logs[m];
      mpfr_div_2ui(h.raw(), h.raw(), 1, MPFR_RNDN);
      f.half_rho.push_back(std::move(h));
    }
    families.push_back(std::move(f));
  }

  double warn = std::pow(10.0, -(ctx.digits() / 2));
  double fail = std::pow(10.0, -(ctx.digits() - 10));

  std::vector<FamilyResult> results(n, FamilyResult{BigReal(bits), {}, nullptr});
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t m = first; m < n; m += stride) {
      try {
        results[m] = family_sum(variant, families[m], n, phase, warn, fail);
      } catch (...) {
        results[m].error = std::current_exception();
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(std::max(jobs, 1u), n);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }

  // Fixed family order keeps the reduction independent of the worker count.
  OscillatorySum out{BigReal(bits), {}, {}};
  for (std::size_t m = 0; m < n; ++m) {
    if (results[m].error) std::rethrow_exception(results[m].error);
    out.value += results[m].sum;
    out.terms_used.push_back(families[m].cap);
    out.warnings.insert(out.warnings.end(), results[m].warnings.begin(),
                        results[m].warnings.end());
  }
  out.value /= phase.pi();
  out.value.set_precision(ctx.bits());
  return out;
}

}  // namespace smooth::detail
