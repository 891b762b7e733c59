#pragma once

#include <string_view>

#include "wsi/result_table.hpp"
#include "wsi/scenario_io.hpp"

namespace wsi {

/// Scenario text of a bundled preset ("fig4" or "fig6"). Throws
/// std::invalid_argument for unknown names.
std::string_view preset_scenario_text(std::string_view name);

/// Runs a bundled preset sweep: fig4 sweeps passive vs proactive
/// eavesdropping rate, fig6 direct vs symbol-level spoofing SINR, both over
/// the listener position x in [0, 1500] m step 10.
ResultTable run_preset(std::string_view name, unsigned threads = 1);

/// Executes the document's sweep section. Eavesdropping sweeps emit
/// (x_m, passive_bpshz, proactive_bpshz), spoofing sweeps
/// (x_m, direct_db, symbol_level_db). Output bytes do not depend on the
/// thread count.
ResultTable run_sweep(const ScenarioDoc& doc, unsigned threads = 1);

}  // namespace wsi
