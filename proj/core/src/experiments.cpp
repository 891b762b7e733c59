#include "wsi/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "wsi/intervention.hpp"
#include "wsi/surveillance.hpp"

namespace wsi {

namespace {

std::vector<double> sweep_grid(const SweepSpec& sweep) {
    const long long n =
        static_cast<long long>(std::floor((sweep.to - sweep.from) / sweep.step + 1e-9)) + 1;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(std::max(1LL, n)));
    for (long long i = 0; i < n; ++i) {
        xs.push_back(sweep.from + static_cast<double>(i) * sweep.step);
    }
    return xs;
}

template <typename PerRow>
void run_rows(std::size_t n_rows, unsigned threads, PerRow&& per_row) {
    const unsigned n_threads = std::max(1u, threads);
    if (n_threads == 1 || n_rows < 2) {
        for (std::size_t i = 0; i < n_rows; ++i) {
            per_row(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_rows + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n_rows, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([begin, end, &per_row] {
            for (std::size_t i = begin; i < end; ++i) {
                per_row(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
}

}  // namespace

ResultTable run_sweep(const ScenarioDoc& doc, unsigned threads) {
    if (!doc.sweep.present) {
        throw ScenarioError("scenario", 0, "sweep", "sweep record required");
    }
    if (doc.scenario.links.size() != 1 || doc.scenario.sids.size() != 1) {
        throw ScenarioError("scenario", 0, "sweep",
                            "sweep experiments need exactly one link and one sid");
    }
    const SuspiciousLink& link = doc.scenario.links.front();
    const Node& tx = doc.scenario.node_by_id(link.tx);
    const Node& rx = doc.scenario.node_by_id(link.rx);
    const Node& swept = doc.scenario.node_by_id(doc.sweep.node);

    const std::vector<double> xs = sweep_grid(doc.sweep);

    ResultTable table;
    table.rows.assign(xs.size(), std::vector<double>(3, 0.0));

    if (doc.sweep.experiment == SweepExperiment::Eavesdropping) {
        table.columns = {"x_m", "passive_bpshz", "proactive_bpshz"};
        run_rows(xs.size(), threads, [&](std::size_t i) {
            Node sid = swept;
            (doc.sweep.coord == 'x' ? sid.position.x : sid.position.y) = xs[i];
            table.rows[i][0] = xs[i];
            table.rows[i][1] = passive_eavesdrop(tx, rx, sid, doc.scenario.channel).r_eav;
            table.rows[i][2] = proactive_auto(tx, rx, sid, doc.scenario.channel).r_eav;
        });
    } else {
        table.columns = {"x_m", "direct_db", "symbol_level_db"};
        run_rows(xs.size(), threads, [&](std::size_t i) {
            Node sid = swept;
            (doc.sweep.coord == 'x' ? sid.position.x : sid.position.y) = xs[i];
            table.rows[i][0] = xs[i];
            table.rows[i][1] = clamped_db(direct_spoof_sinr(tx, rx, sid, doc.scenario.channel));
            table.rows[i][2] = clamped_db(
                symbol_level_spoof_sinr(tx, rx, sid, doc.scenario.channel).sinr_symbol_level);
        });
    }
    return table;
}

ResultTable run_preset(std::string_view name, unsigned threads) {
    const ScenarioDoc doc =
        parse_scenario(preset_scenario_text(name), "preset:" + std::string(name));
    return run_sweep(doc, threads);
}

}  // namespace wsi
