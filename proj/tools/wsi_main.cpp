// Command-line front end: scenario simulation, parameter sweeps, bundled
// figure presets and multi-listener assignment optimization.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wsi/experiments.hpp"
#include "wsi/intervention.hpp"
#include "wsi/network.hpp"
#include "wsi/result_table.hpp"
#include "wsi/scenario_io.hpp"
#include "wsi/surveillance.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out) {
        throw wsi::ScenarioError(path, 0, "", "unwritable output path");
    }
}

int run_simulate(const std::string& path) {
    const wsi::ScenarioDoc doc = wsi::load_scenario(path);
    const wsi::Scenario& sc = doc.scenario;

    std::string out = "sid,link,passive_bpshz,proactive_bpshz,mode,forward_w,noise_w\n";
    for (const std::string& sid_id : sc.sids) {
        const wsi::Node& sid = sc.node_by_id(sid_id);
        for (const wsi::SuspiciousLink& link : sc.links) {
            const wsi::Node& tx = sc.node_by_id(link.tx);
            const wsi::Node& rx = sc.node_by_id(link.rx);
            const auto passive = wsi::passive_eavesdrop(tx, rx, sid, sc.channel);
            const auto active = wsi::proactive_auto(tx, rx, sid, sc.channel);
            out += sid_id + ',' + link.id + ',' + wsi::format_number(passive.r_eav) + ',' +
                   wsi::format_number(active.r_eav) + ',' +
                   wsi::surveillance_mode_name(active.mode) + ',' +
                   wsi::format_number(active.control.forward_power_w) + ',' +
                   wsi::format_number(active.control.noise_power_w) + '\n';
        }
    }
    std::cout << out;
    return 0;
}

int run_optimize(const std::string& path, const std::string& objective_name) {
    const wsi::ScenarioDoc doc = wsi::load_scenario(path);
    wsi::AssignmentObjective objective;
    if (objective_name == "max-total-eav-rate") {
        objective = wsi::AssignmentObjective::MaxTotalEavRate;
    } else if (objective_name == "min-total-malicious-rate") {
        objective = wsi::AssignmentObjective::MinTotalMaliciousRate;
    } else {
        std::cerr << "wsi: unknown objective '" << objective_name << "'\n";
        return kExitValidation;
    }

    const wsi::AssignmentPlan plan =
        wsi::optimize_assignment(doc.scenario, objective, doc.scenario.channel);

    std::string out = "sid,target_link,mode,band\n";
    for (std::size_t i = 0; i < plan.decisions.size(); ++i) {
        const wsi::SidDecision& d = plan.decisions[i];
        const std::string link_id =
            d.link_index >= 0 ? doc.scenario.links[d.link_index].id : "-";
        out += doc.scenario.sids[i] + ',' + link_id + ',' + wsi::sid_mode_name(d.mode) +
               ',' + (d.band.empty() ? "-" : d.band) + '\n';
    }
    out += "# objective_value=" + wsi::format_number(plan.objective_value) + '\n';
    for (std::size_t j = 0; j < plan.constraint_slacks.size(); ++j) {
        out += "# slack " + doc.scenario.legit_receivers[j].node + ' ' +
               doc.scenario.legit_receivers[j].band + '=' +
               wsi::format_number(plan.constraint_slacks[j]) + '\n';
    }
    std::cout << out;
    return plan.infeasible ? kExitInfeasible : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Physical-layer simulator for authorized surveillance and "
                 "intervention of wireless links"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format = "csv";
    unsigned threads = 1;
    app.add_option("--seed", seed, "Override the scenario seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--format", format, "Output format (csv)")
        ->check(CLI::IsMember({"csv"}));
    app.add_option("--threads", threads, "Worker threads for sweeps")
        ->check(CLI::Range(1u, 64u));

    std::string scenario_path;
    std::string out_path;
    std::string figure_name;
    std::string objective_name = "max-total-eav-rate";

    CLI::App* simulate = app.add_subcommand("simulate", "Static per-listener outcomes");
    simulate->add_option("scenario-file", scenario_path)->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Run the scenario's sweep section");
    sweep->add_option("scenario-file", scenario_path)->required();
    sweep->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* figure = app.add_subcommand("figure", "Run a bundled preset (fig4|fig6)");
    figure->add_option("name", figure_name)->required()->check(CLI::IsMember({"fig4", "fig6"}));
    figure->add_option("--out", out_path, "Output CSV path (default stdout)");

    CLI::App* optimize = app.add_subcommand("optimize", "Assign listeners to links");
    optimize->add_option("scenario-file", scenario_path)->required();
    optimize->add_option("--objective", objective_name,
                         "max-total-eav-rate|min-total-malicious-rate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(scenario_path);
        }
        if (sweep->parsed()) {
            wsi::ScenarioDoc doc = wsi::load_scenario(scenario_path);
            if (seed_set) {
                doc.seed = seed;
            }
            write_output(out_path, wsi::run_sweep(doc, threads).to_csv());
            return 0;
        }
        if (figure->parsed()) {
            write_output(out_path, wsi::run_preset(figure_name, threads).to_csv());
            return 0;
        }
        if (optimize->parsed()) {
            return run_optimize(scenario_path, objective_name);
        }
    } catch (const wsi::ScenarioError& e) {
        std::cerr << "wsi: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wsi: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
