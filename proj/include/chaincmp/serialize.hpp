#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "chaincmp/asymptotics.hpp"
#include "chaincmp/counting.hpp"
#include "chaincmp/inference.hpp"
#include "chaincmp/montecarlo.hpp"
#include "chaincmp/paths.hpp"

namespace chaincmp {

using json = nlohmann::ordered_json;

// Counts that may exceed 64 bits are always emitted as decimal strings,
// never as JSON numbers.

// {"m":…, "n":…, "k":…, "total":"…", "counts":{"0":"…",…}, "probs":{"0":"num/den",…}}
json pmf_json(const PMFTable& table);

// Columns: l, count, prob_exact, prob_decimal.
std::string pmf_csv(const PMFTable& table, unsigned digits = 12);

// Histogram object with string keys and decimal-string values.
json histogram_json(const Histogram& hist);

// PMFTable shape over the empirical counts (probs are the exact fractions
// count/trials in lowest terms) plus the run metadata block.
json simulation_json(const SimulationResult& result);
std::string simulation_csv(const SimulationResult& result, unsigned digits = 12);

json report_json(const TestReport& report, unsigned digits = 12);

// Columns: x, density, beta_fit_density, arcsine_density; 15 significant
// digits; metadata (spec, fit parameters) on leading '#' lines. A fit that
// does not exist renders as nan cells.
std::string density_csv(const RescaledDensity& density, const std::optional<BetaFit>& fit);
json density_json(const RescaledDensity& density, const std::optional<BetaFit>& fit);

// Columns: k, m, n, sup_distance; the across-k monotonicity note rides on a
// leading '#' line.
std::string symmetric_table_csv(const SymmetricCaseTable& table);
json symmetric_table_json(const SymmetricCaseTable& table);

// printf %.*g rendering; nan and inf spell as "nan" / "inf".
std::string format_double(double value, int significant_digits = 15);

} // namespace chaincmp
