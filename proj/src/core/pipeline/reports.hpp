#pragma once

#include <string>
#include <vector>

#include "core/metrics/report.hpp"
#include "core/pipeline/config.hpp"

namespace gambitlab {

// Rendered artefacts. All formats are fixed-width printf-style so repeated
// runs over the same inputs produce byte-identical files.
std::string continuations_csv(const GambitReport& report);
std::string qseries_csv(const GambitReport& report);
std::string report_text(const GambitReport& report);
std::string ranking_initial_q_csv(const std::vector<const GambitReport*>& ranked);
std::string ranking_skew_volatility_csv(const std::vector<const GambitReport*>& ranked);
std::string aggregate_csv(const AggregateSummary& agg);

// Per-gambit artefact bundle: <slug>_report.txt, <slug>_continuations.csv,
// <slug>_qseries.csv under cfg.out_dir (created if missing). Every file is
// written atomically; callers render everything before writing anything.
void write_gambit_files(const RunConfig& cfg, const GambitReport& report);

}  // namespace gambitlab
