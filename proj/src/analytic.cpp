#include "smooth/analytic.hpp"

#include <cmath>

#include "oscillatory.hpp"
#include "smooth/errors.hpp"

namespace smooth {

namespace {

struct VariantInfo {
  FormulaVariant variant;
  std::string_view name;
  std::size_t arity;
};

constexpr VariantInfo kVariants[] = {
    {FormulaVariant::Single, "single", 1},
    {FormulaVariant::Schumacher2, "schumacher2", 2},
    {FormulaVariant::HL2, "hl2", 2},
    {FormulaVariant::HL2Cot, "hl2_cot", 2},
    {FormulaVariant::Triple, "triple", 3},
    {FormulaVariant::TripleCot, "triple_cot", 3},
    {FormulaVariant::Quad, "quad", 4},
    {FormulaVariant::QuadCot, "quad_cot", 4},
    {FormulaVariant::GeneralCot, "general", 0},
};

const VariantInfo& info(FormulaVariant v) {
  for (const auto& i : kVariants) {
    if (i.variant == v) return i;
  }
  throw std::logic_error("unknown variant");
}

// Coefficient of each B1*(log x / log a_m) term.
BigReal bernoulli_coefficient(FormulaVariant v, std::size_t n, mpfr_prec_t bits) {
  BigReal c(-1L, bits);
  switch (v) {
    case FormulaVariant::Single:
    case FormulaVariant::HL2:
    case FormulaVariant::Triple:
      break;
    case FormulaVariant::Schumacher2:
    case FormulaVariant::HL2Cot:
      c /= 2;
      break;
    case FormulaVariant::TripleCot:
      c /= 4;
      break;
    case FormulaVariant::Quad:
      c *= 7;
      c /= 8;
      break;
    case FormulaVariant::QuadCot:
      c /= 8;
      break;
    case FormulaVariant::GeneralCot:
      mpfr_div_2ui(c.raw(), c.raw(), static_cast<unsigned long>(n - 1), MPFR_RNDN);
      break;
  }
  return c;
}

bool uses_transcription(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::Single:
    case FormulaVariant::Schumacher2:
    case FormulaVariant::HL2:
    case FormulaVariant::Triple:
    case FormulaVariant::Quad:
      return true;
    default:
      return false;
  }
}

void check_inputs(FormulaVariant variant, const Basis& basis, const XValue& x) {
  std::size_t arity = variant_arity(variant);
  if (arity != 0 && basis.size() != arity) {
    throw ArityMismatch(std::string(variant_name(variant)) + " needs " + std::to_string(arity) +
                        " basis elements, got " + std::to_string(basis.size()));
  }
  if (basis.size() == 0) throw ArityMismatch("empty basis");
  if (basis.size() >= 2 && basis.level() != Validation::Strict) {
    throw DomainError("analytic formulas need a strictly validated basis");
  }
  if (variant == FormulaVariant::Schumacher2 && x.compare(1) <= 0) {
    throw DomainError("schumacher2 is defined for x > 1 only");
  }
}

EvalReport evaluate_once(FormulaVariant variant, const Basis& basis, const XValue& x, double R,
                         std::pair<long, long> caps, unsigned jobs,
                         const PrecisionContext& ctx) {
  PrecisionContext work(escalated_digits(x, basis[0], ctx.digits()));
  mpfr_prec_t bits = work.bits();
  std::size_t n = basis.size();

  EvalReport rep{BigReal(bits), BigReal(bits), BigReal(bits), BigReal(bits), BigReal(bits),
                 0,             {},           {},           work.digits(), R,
                 std::nullopt};

  rep.main_term = uses_transcription(variant) ? transcribed_main_term(basis, x, work)
                                              : residue_main_term(basis, x, work);

  BigReal coef = bernoulli_coefficient(variant, n, bits);
  BigReal tol = integrality_tolerance(work);
  for (std::size_t m = 0; m < n; ++m) {
    LogRatio ratio = frac_log_ratio(x, basis[m], work);
    if (!ratio.exact_power) rep.bernoulli_terms += coef * b1_star(ratio.fraction, tol);
    if (variant == FormulaVariant::Schumacher2) {
      // -(log a_m / (2 log a_other)) B2({log x / log a_m})
      const BigReal& own = work.log_of(basis[m]);
      const BigReal& other = work.log_of(basis[1 - m]);
      BigReal t = own / other;
      t /= 2;
      rep.bernoulli_terms -= t * b2_frac(ratio.fraction);
    }
  }

  if (variant == FormulaVariant::Schumacher2) {
    rep.oscillatory = thm1_double_sum(basis[0], basis[1], x, caps, work);
    rep.double_sum_caps = caps;
    rep.terms_used = {caps.first, caps.second};
  } else if (variant != FormulaVariant::Single) {
    OscillatorySum osc = detail::oscillatory_sum(variant, basis, x, R, jobs, work);
    rep.oscillatory = std::move(osc.value);
    rep.terms_used = std::move(osc.terms_used);
    rep.resonance_warnings = std::move(osc.warnings);
  }

  if (is_member(x, basis)) {
    rep.chi_term = BigReal(1L, bits);
    rep.chi_term /= 2;
  }
  rep.total = rep.main_term + rep.bernoulli_terms;
  rep.total += rep.oscillatory;
  rep.total += rep.chi_term;
  rep.rounded_count = round_to_integer(rep.total);
  return rep;
}

std::pair<long, long> default_caps(const TruncationSpec& trunc) {
  if (trunc.double_sum_caps) return *trunc.double_sum_caps;
  long c = static_cast<long>(std::ceil(trunc.R));
  return {c, c};
}

}  // namespace

std::string_view variant_name(FormulaVariant v) { return info(v).name; }

std::optional<FormulaVariant> parse_variant(std::string_view name) {
  for (const auto& i : kVariants) {
    if (i.name == name) return i.variant;
  }
  return std::nullopt;
}

std::size_t variant_arity(FormulaVariant v) { return info(v).arity; }

OscillatorySum oscillatory_general(const Basis& basis, const XValue& x,
                                   const TruncationSpec& trunc, const PrecisionContext& ctx) {
  if (basis.size() < 2) throw ArityMismatch("the general series needs n >= 2");
  if (basis.level() != Validation::Strict) {
    throw DomainError("analytic formulas need a strictly validated basis");
  }
  return detail::oscillatory_sum(FormulaVariant::GeneralCot, basis, x, trunc.R, trunc.jobs, ctx);
}

BigReal thm1_double_sum(long a, long b, const XValue& x, std::pair<long, long> caps,
                        const PrecisionContext& ctx) {
  auto [N, M] = caps;
  PrecisionContext phase(ctx.digits() + 10);
  mpfr_prec_t bits = phase.bits();
  const BigReal& la = phase.log_of(a);
  const BigReal& lb = phase.log_of(b);
  BigReal ua = frac_log_ratio(x, a, phase).fraction;
  BigReal ub = frac_log_ratio(x, b, phase).fraction;

  BigReal turns(bits + 40);
  std::vector<BigReal> ca;  // cos(2 pi n log x / log a)
  for (long i = 1; i <= N; ++i) {
    mpfr_mul_si(turns.raw(), ua.raw(), i, MPFR_RNDN);
    ca.push_back(sincos_turns(turns, phase).cos);
  }
  std::vector<BigReal> cb;
  std::vector<BigReal> m2la2;  // m^2 log^2 a
  BigReal la2 = la * la;
  BigReal lb2 = lb * lb;
  for (long j = 1; j <= M; ++j) {
    mpfr_mul_si(turns.raw(), ub.raw(), j, MPFR_RNDN);
    cb.push_back(sincos_turns(turns, phase).cos);
    m2la2.push_back(la2 * (j * j));
  }

  double fail = std::pow(10.0, -(ctx.digits() - 10));
  BigReal sum(bits);
  BigReal num(bits);
  BigReal den(bits);
  BigReal n2lb2(bits);
  for (long i = 1; i <= N; ++i) {
    mpfr_mul_si(n2lb2.raw(), lb2.raw(), i * i, MPFR_RNDN);
    for (long j = 1; j <= M; ++j) {
      mpfr_sub(den.raw(), m2la2[j - 1].raw(), n2lb2.raw(), MPFR_RNDN);
      double mag = std::fabs(den.to_double());
      if (mag < fail) throw ResonantDenominator(0, i, mag);
      mpfr_sub(num.raw(), ca[i - 1].raw(), cb[j - 1].raw(), MPFR_RNDN);
      mpfr_div(num.raw(), num.raw(), den.raw(), MPFR_RNDN);
      mpfr_add(sum.raw(), sum.raw(), num.raw(), MPFR_RNDN);
    }
  }
  sum *= la * lb;
  sum /= phase.pi();
  sum /= phase.pi();
  sum.set_precision(ctx.bits());
  return sum;
}

EvalReport evaluate(FormulaVariant variant, const Basis& basis, const XValue& x,
                    const TruncationSpec& trunc, const PrecisionContext& ctx) {
  check_inputs(variant, basis, x);
  if (!(trunc.R > 0)) throw DomainError("R must be positive");
  std::pair<long, long> caps = default_caps(trunc);
  if (variant == FormulaVariant::Schumacher2 && (caps.first < 1 || caps.second < 1)) {
    throw DomainError("double-sum caps must be >= 1");
  }

  double R = trunc.R;
  EvalReport rep = evaluate_once(variant, basis, x, R, caps, trunc.jobs, ctx);
  if (!trunc.adaptive || variant == FormulaVariant::Single) return rep;

  constexpr long kMaxDoubleCap = 4096;
  while (true) {
    if (variant == FormulaVariant::Schumacher2) {
      if (caps.first * 2 > kMaxDoubleCap || caps.second * 2 > kMaxDoubleCap) break;
      caps = {caps.first * 2, caps.second * 2};
    } else {
      if (R * 2 > trunc.adaptive_max_R) break;
      R *= 2;
    }
    EvalReport next = evaluate_once(variant, basis, x, R, caps, trunc.jobs, ctx);
    BigReal delta = abs(next.total - rep.total);
    rep = std::move(next);
    if (delta.to_double() < trunc.adaptive_tolerance) break;
  }
  return rep;
}

EvalReport evaluate_with_escalation(FormulaVariant variant, const Basis& basis, const XValue& x,
                                    const TruncationSpec& trunc, const PrecisionContext& ctx) {
  try {
    return evaluate(variant, basis, x, trunc, ctx);
  } catch (const ResonantDenominator&) {
    PrecisionContext wider(ctx.digits() * 2);
    return evaluate(variant, basis, x, trunc, wider);
  }
}

}  // namespace smooth
