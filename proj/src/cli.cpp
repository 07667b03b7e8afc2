#include "smooth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "smooth/analytic.hpp"
#include "smooth/errors.hpp"
#include "smooth/exact.hpp"
#include "smooth/format.hpp"
#include "smooth/presets.hpp"
#include "smooth/squares.hpp"

namespace smooth {

namespace {

using json = nlohmann::ordered_json;

long parse_long(std::string_view text, std::string_view what) {
  long v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

double parse_double(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ParseError("bad " + std::string(what) + ": '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, std::string_view sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return parts;
}

std::vector<long> parse_bases(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text, ",")) out.push_back(parse_long(part, "basis element"));
  return out;
}

std::pair<long, long> parse_nm(const std::string& text) {
  auto parts = split(text, ",");
  if (parts.size() == 1) {
    long c = parse_long(parts[0], "cap");
    return {c, c};
  }
  if (parts.size() != 2) throw ParseError("caps must be N or N,M");
  return {parse_long(parts[0], "cap"), parse_long(parts[1], "cap")};
}

int resolve_digits(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("SMOOTHCOUNT_DIGITS"); env && *env) {
    return static_cast<int>(parse_long(env, "SMOOTHCOUNT_DIGITS"));
  }
  return PrecisionContext::kDefaultDigits;
}

int decimals_of(const std::string& literal) {
  auto dot = literal.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(literal.size() - dot - 1);
}

std::string format_R(double R) {
  std::ostringstream s;
  s << R;
  return s.str();
}

json report_json(const EvalReport& rep, std::string_view variant, const std::vector<long>& bases,
                 const XValue& x, int digits) {
  json j;
  j["variant"] = variant;
  j["bases"] = bases;
  j["x"] = x.to_string();
  j["digits"] = digits;
  j["total"] = to_fixed_significant(rep.total, digits);
  j["main_term"] = to_fixed_significant(rep.main_term, digits);
  j["bernoulli_terms"] = to_fixed_significant(rep.bernoulli_terms, digits);
  j["oscillatory"] = to_fixed_significant(rep.oscillatory, digits);
  j["chi_term"] = to_fixed_significant(rep.chi_term, digits);
  j["rounded_count"] = rep.rounded_count.get_str();
  j["terms_used"] = rep.terms_used;
  j["working_digits"] = rep.working_digits;
  if (rep.double_sum_caps) {
    j["double_sum_caps"] = {rep.double_sum_caps->first, rep.double_sum_caps->second};
  } else {
    j["R"] = format_R(rep.R);
  }
  json warnings = json::array();
  for (const auto& w : rep.resonance_warnings) {
    warnings.push_back({{"family", w.family}, {"k", w.k}, {"magnitude", w.magnitude}});
  }
  j["resonance_warnings"] = std::move(warnings);
  return j;
}

void report_text(std::ostream& out, const EvalReport& rep, int digits) {
  out << "total: " << to_fixed_significant(rep.total, digits) << '\n';
  out << "main_term: " << to_fixed_significant(rep.main_term, digits) << '\n';
  out << "bernoulli_terms: " << to_fixed_significant(rep.bernoulli_terms, digits) << '\n';
  out << "oscillatory: " << to_fixed_significant(rep.oscillatory, digits) << '\n';
  out << "chi_term: " << to_fixed_significant(rep.chi_term, digits) << '\n';
  out << "rounded_count: " << rep.rounded_count.get_str() << '\n';
  out << "terms_used:";
  for (long t : rep.terms_used) out << ' ' << t;
  out << '\n';
  if (rep.double_sum_caps) {
    out << "double_sum_caps: " << rep.double_sum_caps->first << ',' << rep.double_sum_caps->second
        << '\n';
  } else {
    out << "R: " << format_R(rep.R) << '\n';
  }
  out << "working_digits: " << rep.working_digits << '\n';
  out << "resonance_warnings: " << rep.resonance_warnings.size() << '\n';
}

void warn_resonances(std::ostream& err, const EvalReport& rep) {
  for (const auto& w : rep.resonance_warnings) {
    err << "warning: near-resonant denominator in family " << w.family << " at k=" << w.k
        << " (|sin| = " << w.magnitude << ")\n";
  }
}

struct FormulaRequest {
  std::string variant;
  std::string bases;
  std::string x;
  double R = 16;
  std::string nm;
  long k = 400;
  bool adaptive = false;
  int digits = 0;
  unsigned jobs = 1;
  std::string format = "text";
};

EvalReport run_formula(const FormulaRequest& req, const std::vector<long>& bases, const XValue& x,
                       const PrecisionContext& ctx) {
  if (req.variant == "squares") {
    Basis basis = validate_unsorted(bases, Validation::Strict);
    if (basis.size() != 2) throw ArityMismatch("squares needs exactly 2 basis elements");
    SquaresTruncation trunc;
    if (!req.nm.empty()) trunc.nm_cap = parse_nm(req.nm);
    trunc.k_cap = req.k;
    return n2_formula(basis[0], basis[1], x, trunc, ctx);
  }
  auto variant = parse_variant(req.variant);
  if (!variant) throw ParseError("unknown variant '" + req.variant + "'");
  Basis basis = validate_unsorted(bases, Validation::Strict);
  TruncationSpec trunc;
  trunc.R = req.R;
  trunc.adaptive = req.adaptive;
  trunc.jobs = req.jobs;
  if (!req.nm.empty()) trunc.double_sum_caps = parse_nm(req.nm);
  return evaluate_with_escalation(*variant, basis, x, trunc, ctx);
}

int cmd_exact(const std::string& bases_text, const std::string& x_text, bool squares,
              std::ostream& out) {
  std::vector<long> bases = parse_bases(bases_text);
  XValue x = XValue::parse(x_text);
  Basis basis = validate_unsorted(bases, Validation::Relaxed);
  if (squares) {
    if (basis.size() != 2) throw ArityMismatch("squares needs exactly 2 basis elements");
    out << count_squares_exact(basis[0], basis[1], x).get_str() << '\n';
  } else {
    out << count_smooth(basis, x).get_str() << '\n';
  }
  return kExitOk;
}

int cmd_formula(const FormulaRequest& req, std::ostream& out, std::ostream& err) {
  std::vector<long> bases = parse_bases(req.bases);
  XValue x = XValue::parse(req.x);
  int digits = resolve_digits(req.digits);
  PrecisionContext ctx(digits);
  EvalReport rep = run_formula(req, bases, x, ctx);
  warn_resonances(err, rep);
  if (req.format == "json") {
    out << report_json(rep, req.variant, bases, x, digits).dump(2) << '\n';
  } else {
    report_text(out, rep, digits);
  }
  return kExitOk;
}

struct TableRequest {
  std::string preset;
  std::string rows;
  std::string format = "csv";
  double tolerance = 1e-6;
  bool force = false;
  int digits = 0;
  unsigned jobs = 1;
};

struct RowLine {
  std::string x;
  std::string exact;
  std::string formula;
  std::string printed;
  std::string abs_diff;
  bool round_ok = false;
  std::string status;
};

RowLine describe(const PresetRow& row, const RowOutcome& o) {
  RowLine line{row.x, o.exact.get_str(), "", row.formula, "", o.round_ok, ""};
  if (o.skipped) {
    line.exact = "";
    line.status = "skipped: beyond-desk-scale";
    return line;
  }
  line.formula = to_fixed(o.report->total, decimals_of(row.formula));
  line.abs_diff = o.abs_diff.to_scientific(3);
  bool ok = o.round_ok && (row.beyond_desk_scale || o.digits_ok);
  line.status = ok ? "ok" : "FAIL";
  return line;
}

int cmd_table(const TableRequest& req, std::ostream& out, std::ostream& err) {
  const TablePreset* preset = find_preset(req.preset);
  if (!preset) throw ParseError("unknown preset '" + req.preset + "'");
  std::size_t first = 0;
  std::size_t last = preset->rows.size() - 1;
  if (!req.rows.empty()) {
    auto parts = split(req.rows, "..");
    if (parts.size() != 2) throw ParseError("rows must be a..b");
    long a = parse_long(parts[0], "row index");
    long b = parse_long(parts[1], "row index");
    if (a < 0 || b < a || static_cast<std::size_t>(b) >= preset->rows.size()) {
      throw ParseError("row range out of bounds (preset has " +
                       std::to_string(preset->rows.size()) + " rows)");
    }
    first = static_cast<std::size_t>(a);
    last = static_cast<std::size_t>(b);
  }
  PrecisionContext ctx(resolve_digits(req.digits));

  std::size_t count = last - first + 1;
  std::vector<std::optional<RowOutcome>> outcomes(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        outcomes[i] = evaluate_row(*preset, preset->rows[first + i], ctx, req.tolerance,
                                   req.force);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(req.jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<RowLine> lines;
  std::vector<std::string> failed;
  for (std::size_t i = 0; i < count; ++i) {
    const PresetRow& row = preset->rows[first + i];
    RowLine line;
    if (outcomes[i]) {
      line = describe(row, *outcomes[i]);
    } else {
      line = RowLine{row.x, "", "", row.formula, "", false, "error: " + errors[i]};
    }
    if (line.status != "ok" && line.status.rfind("skipped", 0) != 0) failed.push_back(row.x);
    lines.push_back(std::move(line));
  }

  if (req.format == "json") {
    json j;
    j["preset"] = preset->id;
    json rows = json::array();
    for (const auto& l : lines) {
      rows.push_back({{"x", l.x},
                      {"exact", l.exact},
                      {"formula", l.formula},
                      {"paper_formula", l.printed},
                      {"abs_diff", l.abs_diff},
                      {"round_ok", l.round_ok},
                      {"status", l.status}});
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << "x,exact,formula,paper_formula,abs_diff,round_ok,status\n";
    for (const auto& l : lines) {
      out << l.x << ',' << l.exact << ',' << l.formula << ',' << l.printed << ',' << l.abs_diff
          << ',' << (l.round_ok ? "true" : "false") << ',' << l.status << '\n';
    }
  }
  if (!failed.empty()) {
    err << preset->id << ": " << failed.size() << " row(s) failed:";
    for (const auto& x : failed) err << ' ' << x;
    err << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct SweepRequest {
  FormulaRequest formula;
  std::string range;
};

int cmd_sweep(const SweepRequest& req, std::ostream& out, std::ostream& err) {
  auto parts = split(req.range, ":");
  if (parts.size() < 2 || parts.size() > 3) throw ParseError("R range must be a:b or a:b:step");
  double lo = parse_double(parts[0], "R");
  double hi = parse_double(parts[1], "R");
  double step = parts.size() == 3 ? parse_double(parts[2], "R step") : 1.0;
  if (!(lo > 0) || hi < lo || !(step > 0)) throw ParseError("R range must satisfy 0 < a <= b");

  std::vector<long> bases = parse_bases(req.formula.bases);
  XValue x = XValue::parse(req.formula.x);
  int digits = resolve_digits(req.formula.digits);
  PrecisionContext ctx(digits);
  Basis counting = validate_unsorted(bases, Validation::Relaxed);
  bool squares = req.formula.variant == "squares";
  mpz_class exact = squares ? count_squares_exact(counting[0], counting[1], x)
                            : count_smooth(counting, x);
  BigReal exact_value(exact, ctx.bits());

  out << "R,total,error\n";
  long steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    double R = lo + static_cast<double>(i) * step;
    FormulaRequest f = req.formula;
    f.R = R;
    if (squares) f.nm = std::to_string(static_cast<long>(R));
    EvalReport rep = run_formula(f, bases, x, ctx);
    warn_resonances(err, rep);
    out << format_R(R) << ',' << to_fixed_significant(rep.total, digits) << ','
        << abs(rep.total - exact_value).to_scientific(6) << '\n';
  }
  return kExitOk;
}

int cmd_generate(const std::string& bases_text, const std::string& x_text, std::ostream& out) {
  Basis basis = validate_unsorted(parse_bases(bases_text), Validation::Relaxed);
  SmoothStream stream(basis, XValue::parse(x_text));
  while (auto v = stream.next()) out << v->get_str() << '\n';
  return kExitOk;
}

void add_formula_options(CLI::App* sub, FormulaRequest& f, bool with_R) {
  sub->add_option("--variant", f.variant,
                  "single|schumacher2|hl2|hl2_cot|triple|triple_cot|quad|quad_cot|general|squares")
      ->required();
  sub->add_option("--bases", f.bases, "comma-separated basis, e.g. 2,3,5")->required();
  sub->add_option("--x", f.x, "evaluation point: 1000, 1e100, 11/10 or 1.1")->required();
  if (with_R) sub->add_option("--R", f.R, "balanced truncation parameter");
  sub->add_option("--nm", f.nm, "double-sum caps N or N,M");
  sub->add_option("--k", f.k, "single Bessel sum cap (squares)");
  sub->add_option("--digits", f.digits, "working digits (default $SMOOTHCOUNT_DIGITS or 50)");
  sub->add_option("--jobs", f.jobs, "worker threads");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and analytic counting of numbers a1^q1 ... an^qn <= x"};
  app.name("smoothcount");
  app.require_subcommand(1);

  std::string exact_bases, exact_x;
  bool exact_squares = false;
  auto* exact = app.add_subcommand("exact", "exact count by nested floor-logs");
  exact->add_option("--bases", exact_bases, "comma-separated basis")->required();
  exact->add_option("--x", exact_x, "upper limit")->required();
  exact->add_flag("--squares", exact_squares, "count a^(p^2) b^(q^2) instead");

  FormulaRequest formula;
  auto* formula_cmd = app.add_subcommand("formula", "evaluate an analytic formula");
  add_formula_options(formula_cmd, formula, true);
  formula_cmd->add_flag("--adaptive", formula.adaptive, "double R until the total settles");
  formula_cmd->add_option("--format", formula.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  TableRequest table;
  auto* table_cmd = app.add_subcommand("table", "reproduce a printed table preset");
  table_cmd->add_option("--preset", table.preset, "table1..table5")->required();
  table_cmd->add_option("--rows", table.rows, "row index range a..b (0-based, inclusive)");
  table_cmd->add_option("--format", table.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--tolerance", table.tolerance, "allowed |formula - printed|");
  table_cmd->add_flag("--force", table.force, "also evaluate rows beyond desk scale");
  table_cmd->add_option("--digits", table.digits, "working digits");
  table_cmd->add_option("--jobs", table.jobs, "worker threads over rows");

  SweepRequest sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "total and error across a range of R");
  add_formula_options(sweep_cmd, sweep.formula, false);
  sweep_cmd->add_option("--R", sweep.range, "a:b or a:b:step")->required();

  std::string gen_bases, gen_x;
  auto* generate = app.add_subcommand("generate", "list members up to a limit");
  generate->add_option("--bases", gen_bases, "comma-separated basis")->required();
  generate->add_option("--x", gen_x, "upper limit")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitParseError;
  }

  try {
    if (*exact) return cmd_exact(exact_bases, exact_x, exact_squares, out);
    if (*formula_cmd) return cmd_formula(formula, out, err);
    if (*table_cmd) return cmd_table(table, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*generate) return cmd_generate(gen_bases, gen_x, out);
  } catch (const InvalidBasis& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidBasis;
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidBasis;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const ResonantDenominator& e) {
    err << "error: " << e.what() << " after precision escalation\n";
    return kExitNumericFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumericFailure;
  }
  return kExitParseError;
}

}  // namespace smooth
