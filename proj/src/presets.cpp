#include "smooth/presets.hpp"

#include <sstream>

#include "smooth/exact.hpp"
#include "smooth/squares.hpp"

namespace smooth {

namespace {

PresetRow nm_row(std::string x, std::string eval_x, std::string count, std::string formula,
                 long c, bool beyond = false) {
  return {std::move(x), std::move(eval_x), std::move(count), std::move(formula), 0, {c, c},
          beyond};
}

PresetRow r_row(std::string x, std::string count, std::string formula, double R,
                bool beyond = false) {
  std::string eval_x = x;
  return {std::move(x), std::move(eval_x), std::move(count), std::move(formula), R, {0, 0},
          beyond};
}

std::vector<TablePreset> build() {
  std::vector<TablePreset> t;
  t.push_back({"table1", {2, 3}, FormulaVariant::Schumacher2, 0,
               {
                   nm_row("1", "11/10", "1", "1.0510201857955517", 4),
                   nm_row("10", "10", "7", "7.0071497373839231", 22),
                   nm_row("1e2", "1e2", "20", "20.0045160354084706", 10),
                   nm_row("1e3", "1e3", "40", "40.0039084310672772", 12),
                   nm_row("1e4", "1e4", "67", "67.0408408937206653", 20),
                   nm_row("1e5", "1e5", "101", "101.05072154439969785", 28),
                   nm_row("1e6", "1e6", "142", "142.01315000789587358", 70),
                   nm_row("1e7", "1e7", "190", "190.00707389223323501", 110),
                   nm_row("1e8", "1e8", "244", "244.00659912032029415", 140),
                   nm_row("1e9", "1e9", "306", "306.00585869480145596", 160),
                   nm_row("1e10", "1e10", "376", "376.02126583465866742", 170),
                   nm_row("1e100", "1e100", "35084", "35084.0568926232894816675", 2000),
                   nm_row("1e1000", "1e1000", "3483931", "3483931.035272714689991309386", 4000),
               }});
  t.push_back({"table2", {2, 3}, FormulaVariant::HL2, 0,
               {
                   r_row("1", "1", "1.00408281281244794423184044310637662236", 1),
                   r_row("10", "7", "7.01039536792580652845911613960427072715", 6),
                   r_row("1e2", "20", "20.00554687989157075178992137362449803027", 10),
                   r_row("1e3", "40", "40.00416733658863125098651349198857667561", 26),
                   r_row("1e4", "67", "67.04067163854917851848072234444363738009", 32),
                   r_row("1e5", "101", "101.00383710643693392983460661037688277109", 44),
                   r_row("1e6", "142", "142.00519665851176957826409909346411626717", 60),
                   r_row("1e7", "190", "190.00431172466646336030921684292744206625", 100),
                   r_row("1e8", "244", "244.00043300366963526250817238561664826018", 122),
                   r_row("1e9", "306", "306.00450681431786167717856515798365069396", 146),
                   r_row("1e10", "376", "376.02231447192801988487484982661961706561", 160),
                   r_row("1e100", "35084", "35084.03451234481158685735036751788214481906", 3000),
                   r_row("1e1000", "3483931", "3483931.03067546896021243171738747049589388966",
                         3000),
                   r_row("1e10000", "348149087",
                         "348149087.05625852937187129720297862230958308491", 24000, true),
                   r_row("1e100000", "34812470748",
                         "34812470748.06400873722492550333469431071713138958", 200000, true),
               }});
  t.push_back({"table3", {2, 3, 5}, FormulaVariant::Triple, 0,
               {
                   r_row("1", "1", "1.0191146914343678209209456", 3),
                   r_row("10", "9", "9.0066388420020729763649195", 11),
                   r_row("1e2", "34", "34.01798108016701636663657078", 32),
                   r_row("1e3", "86", "86.01831146911104727455077198", 40),
                   r_row("1e4", "175", "175.01259815271196528318821070", 52),
                   r_row("1e5", "313", "313.01116052291470126065468770", 100),
                   r_row("1e6", "507", "507.04384962202822061525989835", 104),
                   r_row("1e7", "768", "768.05762686767314864195183397", 110),
                   r_row("1e8", "1105", "1105.00435666776355760375109758", 260),
                   r_row("1e9", "1530", "1530.00198789289107971841182114", 300),
                   r_row("1e10", "2053", "2053.01709151724653660944693303", 306),
                   r_row("1e100", "1697191", "1697191.10060827971167051326275935", 20000),
               }});
  t.push_back({"table4", {2, 3, 5, 7}, FormulaVariant::QuadCot, 0,
               {
                   r_row("1", "1", "1.030388812940249824617233653730019551", 3),
                   r_row("10", "10", "10.01263249440259984789405319823431872556", 3),
                   r_row("1e2", "46", "46.03668521491726375130238293886497852216", 20),
                   r_row("1e3", "141", "141.01285390547424275647701138240776403195", 80),
                   r_row("1e4", "338", "338.0186997720522261698185344005048234745", 80),
                   r_row("1e5", "694", "694.00540895426731024839939099335158382934", 100),
                   r_row("1e6", "1273", "1273.02115574787663113791230619711970129327", 1500),
                   r_row("1e7", "2155", "2155.01133325568473975698180880511876853632", 1500),
                   r_row("1e8", "3427", "3427.01611847162744035197962908126411814549", 1500),
                   r_row("1e9", "5194", "5194.03771424320772544603355297308020543638", 1600),
                   r_row("1e10", "7575", "7575.01767118495435682818874877606239707862", 9000),
               }});
  t.push_back({"table5", {2, 3}, std::nullopt, 400,
               {
                   nm_row("1", "11/10", "1", "1.077194794603379", 1),
                   nm_row("10", "10", "4", "4.069103424005291", 1),
                   nm_row("1e2", "1e2", "7", "7.000949506610362", 5),
                   nm_row("1e3", "1e3", "9", "9.086395912838084", 3),
                   nm_row("1e4", "1e4", "11", "11.038613589829053", 5),
                   nm_row("1e5", "1e5", "15", "15.012706923272531", 5),
                   nm_row("1e6", "1e6", "17", "17.046462385363300", 5),
                   nm_row("1e7", "1e7", "18", "18.408421860888305", 9),
                   nm_row("1e8", "1e8", "22", "22.127760008955621", 6),
                   nm_row("1e9", "1e9", "24", "24.034210155019944", 8),
                   nm_row("1e10", "1e10", "26", "26.009844154207983", 9),
                   nm_row("1e100", "1e100", "226", "226.001668111078420", 39),
                   nm_row("1e1000", "1e1000", "2122", "2122.031291011313557", 168),
                   nm_row("1e10000", "1e10000", "20886", "20886.032472386492101", 400, true),
                   nm_row("1e100000", "1e100000", "207756", "207756.0303040763527672", 1000, true),
                   nm_row("1e1000000", "1e1000000", "2074033", "2074033.0733802760244109", 1400,
                          true),
               }});
  return t;
}

}  // namespace

const std::vector<TablePreset>& table_presets() {
  static const std::vector<TablePreset> presets = build();
  return presets;
}

const TablePreset* find_preset(std::string_view id) {
  for (const auto& p : table_presets()) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::string presets_tsv() {
  std::ostringstream out;
  for (const auto& p : table_presets()) {
    for (const auto& r : p.rows) {
      out << p.id << '\t' << r.x << '\t' << r.eval_x << '\t' << r.count << '\t' << r.formula
          << '\t';
      if (r.nm.first > 0) {
        out << "(n,m)=(" << r.nm.first << ',' << r.nm.second << ')';
      } else {
        out << "R=" << static_cast<long>(r.R);
      }
      out << '\n';
    }
  }
  return out.str();
}

RowOutcome evaluate_row(const TablePreset& preset, const PresetRow& row,
                        const PrecisionContext& ctx, double tolerance, bool force,
                        unsigned jobs) {
  RowOutcome out{0, std::nullopt, BigReal(ctx.bits()), false, false, false};
  if (row.beyond_desk_scale && !force) {
    out.skipped = true;
    return out;
  }
  XValue x = XValue::parse(row.eval_x);
  Basis basis = validate_basis(preset.bases);
  if (preset.variant) {
    out.exact = count_smooth(basis, x);
    TruncationSpec trunc;
    trunc.jobs = jobs;
    if (row.nm.first > 0) {
      trunc.double_sum_caps = row.nm;
    } else {
      trunc.R = row.R;
    }
    out.report = evaluate_with_escalation(*preset.variant, basis, x, trunc, ctx);
  } else {
    out.exact = count_squares_exact(preset.bases[0], preset.bases[1], x);
    out.report = n2_formula(preset.bases[0], preset.bases[1], x, {row.nm, preset.k_cap}, ctx);
  }
  const BigReal& total = out.report->total;
  out.abs_diff = abs(total - BigReal::parse(row.formula, total.precision()));
  out.round_ok = out.report->rounded_count == out.exact;
  out.digits_ok = out.abs_diff.to_double() <= tolerance;
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace smooth
