#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smooth/analytic.hpp"

namespace smooth {

struct PresetRow {
  std::string x;       // as printed: "1", "10", "1e2", "1e100"
  std::string eval_x;  // where the formula is evaluated
  std::string count;   // printed exact count
  std::string formula;  // printed formula value, digit for digit
  double R = 0;
  std::pair<long, long> nm{0, 0};
  bool beyond_desk_scale = false;
};

struct TablePreset {
  std::string id;
  std::vector<long> bases;
  // nullopt: the squares formula.
  std::optional<FormulaVariant> variant;
  long k_cap = 0;
  std::vector<PresetRow> rows;
};

const std::vector<TablePreset>& table_presets();
const TablePreset* find_preset(std::string_view id);

// One tab-separated line per row: id, x, eval_x, count, formula, truncation.
std::string presets_tsv();

struct RowOutcome {
  mpz_class exact;
  std::optional<EvalReport> report;  // empty when skipped
  BigReal abs_diff;                  // |formula - printed formula|
  bool round_ok = false;
  bool digits_ok = false;
  bool skipped = false;
};

// Exact count and formula value at the row's printed truncation. Rows beyond
// desk scale are skipped unless `force`.
RowOutcome evaluate_row(const TablePreset& preset, const PresetRow& row,
                        const PrecisionContext& ctx, double tolerance, bool force,
                        unsigned jobs = 1);
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace smooth
