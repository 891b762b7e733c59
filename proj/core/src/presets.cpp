#include <stdexcept>
#include <string_view>

#include "wsi/experiments.hpp"

namespace wsi {

namespace {

// Kept byte-identical with presets/fig4.scn and presets/fig6.scn.
constexpr std::string_view kFig4 = R"(# Passive vs proactive eavesdropping rate along the suspicious link axis.
channel exponent=3 ref_loss_db=-60 ref_distance_m=10 min_distance_m=1
node id=alice role=suspicious-tx x=0 y=0 tx_dbm=43 noise_dbm=-80
node id=bob role=suspicious-rx x=0 y=500 noise_dbm=-80
node id=sid1 role=sid x=0 y=0 tx_dbm=43 noise_dbm=-80
link id=l1 tx=alice rx=bob band=b1
sid id=sid1
sweep experiment=eavesdropping node=sid1 coord=y from=0 to=1500 step=10
seed value=1
)";

constexpr std::string_view kFig6 = R"(# Direct vs symbol-level spoofing SINR along the malicious link axis.
channel exponent=3 ref_loss_db=-60 ref_distance_m=10 min_distance_m=1
node id=alice role=suspicious-tx x=0 y=0 tx_dbm=43 noise_dbm=-80
node id=bob role=suspicious-rx x=0 y=500 noise_dbm=-80
node id=sid1 role=sid x=0 y=0 tx_dbm=43 noise_dbm=-80
link id=l1 tx=alice rx=bob band=b1
sid id=sid1
sweep experiment=spoofing node=sid1 coord=y from=0 to=1500 step=10
seed value=1
)";

}  // namespace

std::string_view preset_scenario_text(std::string_view name) {
    if (name == "fig4") {
        return kFig4;
    }
    if (name == "fig6") {
        return kFig6;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected fig4 or fig6)");
}

}  // namespace wsi
