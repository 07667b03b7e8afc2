#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smooth/basis.hpp"
#include "smooth/bigreal.hpp"
#include "smooth/numerics.hpp"
#include "smooth/xvalue.hpp"

namespace smooth {

enum class FormulaVariant {
  Single,
  Schumacher2,
  HL2,
  HL2Cot,
  Triple,
  TripleCot,
  Quad,
  QuadCot,
  GeneralCot,
};

std::string_view variant_name(FormulaVariant v);
std::optional<FormulaVariant> parse_variant(std::string_view name);
// Required basis size, or 0 for any n >= 1 (GeneralCot).
std::size_t variant_arity(FormulaVariant v);

struct TruncationSpec {
  // Family m sums k = 1..floor(R log a_m).
  double R = 16;
  // (N, M) for the double series of Schumacher2; defaults to (ceil R, ceil R).
  std::optional<std::pair<long, long>> double_sum_caps;
  bool adaptive = false;
  double adaptive_tolerance = 1e-6;
  double adaptive_max_R = 1e6;
  // Worker threads for per-family sums; results do not depend on it.
  unsigned jobs = 1;
};

struct ResonanceWarning {
  int family;
  long k;
  double magnitude;
};

struct EvalReport {
  BigReal main_term;
  BigReal bernoulli_terms;
  BigReal oscillatory;
  BigReal chi_term;
  BigReal total;
  mpz_class rounded_count;
  std::vector<long> terms_used;
  std::vector<ResonanceWarning> resonance_warnings;
  int working_digits = 0;
  // Truncation actually used (differs from the request in adaptive mode).
  double R = 0;
  std::optional<std::pair<long, long>> double_sum_caps;
};

// Residue at s = 0 of x^s / (s prod (1 - a_k^(-s))), from formal series.
BigReal residue_main_term(const Basis& basis, const XValue& x, const PrecisionContext& ctx);

// The printed main-term polynomials for n = 1..4, term by term.
BigReal transcribed_main_term(const Basis& basis, const XValue& x, const PrecisionContext& ctx);

struct OscillatorySum {
  BigReal value;
  std::vector<long> terms_used;
  std::vector<ResonanceWarning> warnings;
};

// Cot-product series for general n, with per-family caps floor(R log a_m).
OscillatorySum oscillatory_general(const Basis& basis, const XValue& x,
                                   const TruncationSpec& trunc, const PrecisionContext& ctx);

// (log a log b / pi^2) sum_{n<=N} sum_{m<=M}
//   [cos(2 pi n L / log a) - cos(2 pi m L / log b)] / (m^2 log^2 a - n^2 log^2 b)
BigReal thm1_double_sum(long a, long b, const XValue& x, std::pair<long, long> caps,
                        const PrecisionContext& ctx);

EvalReport evaluate(FormulaVariant variant, const Basis& basis, const XValue& x,
                    const TruncationSpec& trunc, const PrecisionContext& ctx);

// evaluate, retried once at twice the digits if a denominator is resonant.
EvalReport evaluate_with_escalation(FormulaVariant variant, const Basis& basis, const XValue& x,
                                    const TruncationSpec& trunc, const PrecisionContext& ctx);

}  // namespace smooth
