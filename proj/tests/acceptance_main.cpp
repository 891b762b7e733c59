// Acceptance suite: every release criterion checked at its stated tolerance,
// one PASS/FAIL line each. Exits with the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wsi/channel.hpp"
#include "wsi/experiments.hpp"
#include "wsi/intervention.hpp"
#include "wsi/network.hpp"
#include "wsi/protocol.hpp"
#include "wsi/surveillance.hpp"

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  C%d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) {
        ++failures;
    }
}

struct Axis {
    wsi::ChannelModel model{};
    wsi::Node alice{"alice", {0.0, 0.0}, wsi::Role::SuspiciousTx, 43.0, -80.0};
    wsi::Node bob{"bob", {0.0, 500.0}, wsi::Role::SuspiciousRx,
                  -std::numeric_limits<double>::infinity(), -80.0};
    wsi::Node sid{"sid1", {0.0, 0.0}, wsi::Role::Sid, 43.0, -80.0};

    wsi::Node at(double x) const {
        wsi::Node s = sid;
        s.position.y = x;
        return s;
    }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

void criterion_1_baseline(const Axis& ax) {
    const double snr = wsi::link_snr(ax.alice, ax.bob, ax.model).snr;
    const double snr_db = wsi::linear_to_db(snr);
    const double rate = wsi::capacity(snr);
    report(1, "baseline link budget",
           snr_db >= 11.9 && snr_db <= 12.1 && rate >= 4.0 && rate <= 4.15,
           fmt("snr=%.4f dB in [11.9,12.1], capacity=%.4f bps/Hz in [4.0,4.15]", snr_db,
               rate));
}

void criterion_2_passive(const Axis& ax, const wsi::ResultTable& fig4) {
    const double r0 = wsi::capacity(wsi::link_snr(ax.alice, ax.bob, ax.model).snr);
    bool pass = true;
    double worst = 0.0;
    for (const auto& row : fig4.rows) {
        if (row[0] <= 500.0) {
            worst = std::max(worst, std::abs(row[1] - r0));
            pass = pass && std::abs(row[1] - r0) <= 1e-6;
        } else {
            pass = pass && row[1] == 0.0;
        }
    }
    report(2, "passive curve constant then zero", pass,
           fmt("max |r_eav - r0| = %.2e on [0,500], zero beyond", worst));
}

void criterion_3_proactive_origin(const wsi::ResultTable& fig4) {
    const double v = fig4.rows.front()[2];
    report(3, "proactive rate at x=0", v >= 5.9 && v <= 6.1,
           fmt("r_eav=%.4f bps/Hz in [5.9,6.1]", v));
}

void criterion_4_relay_peak(const wsi::ResultTable& fig4) {
    double best = 0.0, best_x = 0.0;
    const double passive = fig4.rows.front()[1];
    for (const auto& row : fig4.rows) {
        if (row[0] > 0.0 && row[0] < 500.0 && row[2] > best) {
            best = row[2];
            best_x = row[0];
        }
    }
    const double gain = 100.0 * (best / passive - 1.0);
    report(4, "relay-regime peak location and gain",
           best_x >= 150.0 && best_x <= 300.0 && gain >= 60.0 && gain <= 85.0,
           fmt("argmax=%.0f m in [150,300], gain=%.1f%% in [60,85]", best_x, gain));
}

void criterion_5_jamming_boundary(const wsi::ResultTable& fig4) {
    double last_positive = 0.0;
    for (const auto& row : fig4.rows) {
        if (row[2] > 0.0) {
            last_positive = row[0];
        }
    }
    report(5, "jamming-regime boundary",
           last_positive >= 1120.0 && last_positive <= 1240.0,
           fmt("largest x with positive rate = %.0f m in [1120,1240]", last_positive));
}

void criterion_6_spoofing(const wsi::ResultTable& fig6) {
    double peak_direct_x = 0.0, peak_direct = -1e9;
    double peak_symbol_x = 0.0, peak_symbol = -1e9;
    bool direct_negative_beyond_1000 = true;
    bool gain5_on_0_1000 = true;
    bool gain10_on_400_600 = true;
    double crossing = 0.0;
    double prev_x = 0.0, prev_symbol = 1e9;
    for (const auto& row : fig6.rows) {
        const double x = row[0], direct = row[1], symbol = row[2];
        if (direct > peak_direct) {
            peak_direct = direct;
            peak_direct_x = x;
        }
        if (symbol > peak_symbol) {
            peak_symbol = symbol;
            peak_symbol_x = x;
        }
        if (x > 1000.0 && direct >= 0.0) {
            direct_negative_beyond_1000 = false;
        }
        if (x <= 1000.0 && symbol - direct < 5.0) {
            gain5_on_0_1000 = false;
        }
        if (x >= 400.0 && x <= 600.0 && symbol - direct < 10.0) {
            gain10_on_400_600 = false;
        }
        if (prev_symbol > 0.0 && symbol <= 0.0 && crossing == 0.0) {
            crossing = 0.5 * (prev_x + x);
        }
        prev_x = x;
        prev_symbol = symbol;
    }
    const bool crossing_ok = crossing >= 1050.0 && crossing <= 1170.0;
    report(6, "spoofing curves",
           peak_direct_x == 500.0 && peak_symbol_x == 500.0 &&
               direct_negative_beyond_1000 && gain5_on_0_1000 && gain10_on_400_600 &&
               crossing_ok,
           fmt("peaks at x=%.0f/%.0f, 0 dB crossing near %.0f m in [1050,1170]",
               peak_direct_x, peak_symbol_x, crossing));
}

void criterion_7_oracles(const Axis& ax) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> xs(0.0, 1400.0);
    double worst_rate = 0.0;
    double worst_rel = 0.0;
    bool pass = true;
    for (int k = 0; k < 20; ++k) {
        const double x = xs(rng);
        const auto g = oracles::axis_geometry(x);

        const double oracle_rate =
            oracles::best_eav_rate_grid(g.snr_ab, g.snr_as, g.budget_t, 500);
        const double got_rate = wsi::proactive_auto(ax.alice, ax.bob, ax.at(x), ax.model).r_eav;
        worst_rate = std::max(worst_rate, std::abs(got_rate - oracle_rate));
        pass = pass && std::abs(got_rate - oracle_rate) <= 1e-3;

        const double oracle_sinr = oracles::best_spoof_sinr_grid(g.budget_t, g.snr_ab, 100000);
        const double got_sinr =
            wsi::symbol_level_spoof_sinr(ax.alice, ax.bob, ax.at(x), ax.model)
                .sinr_symbol_level;
        const double rel = std::abs(got_sinr - oracle_sinr) / oracle_sinr;
        worst_rel = std::max(worst_rel, rel);
        pass = pass && rel <= 1e-6;
    }
    report(7, "optimizers match brute-force oracles on 20 geometries", pass,
           fmt("max |rate diff| = %.2e <= 1e-3, max rel sinr diff = %.2e <= 1e-6",
               worst_rate, worst_rel));
}

bool prop_eavesdropping_rate() {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> r(0.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double r0 = r(rng), r1 = r(rng);
        const double v = wsi::eavesdropping_rate(r0, r1);
        if (v != (r1 >= r0 ? r0 : 0.0)) {
            return false;
        }
    }
    return wsi::eavesdropping_rate(2.0, 2.0) == 2.0;
}

bool prop_symbol_dominates_direct(const Axis& ax) {
    for (int i = 0; i < 100; ++i) {
        const double x = 1500.0 * i / 99.0;
        const auto out = wsi::symbol_level_spoof_sinr(ax.alice, ax.bob, ax.at(x), ax.model);
        if (out.sinr_symbol_level < out.sinr_direct) {
            return false;
        }
    }
    return true;
}

bool prop_monotone_jam(const Axis& ax) {
    const auto g = oracles::axis_geometry(700.0);
    double last = 1e18;
    for (int i = 0; i <= 100; ++i) {
        wsi::SidControl c{wsi::CombineSign::Destructive, 0.0,
                          wsi::dbm_to_watts(43.0) * i / 100.0};
        const double snr = wsi::bob_snr_under_control(g.snr_ab, g.snr_as,
                                                      oracles::pathloss(200.0), c, 1e-11);
        if (snr >= last) {
            return false;
        }
        last = snr;
    }
    return true;
}

bool prop_pilot_conservation() {
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> lam(0.0, 1e5);
    for (int m : {1, 2, 8, 64, 1024}) {
        for (int i = 0; i < 200; ++i) {
            const auto gains = wsi::pilot_spoof(m, lam(rng));
            if (std::abs(gains.r0_gain_factor + gains.r1_gain_factor - m) > 1e-12 * m) {
                return false;
            }
        }
    }
    return true;
}

bool prop_harq_minimality() {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> snr(0.01, 40.0);
    std::uniform_real_distribution<double> rate(0.1, 8.0);
    for (int i = 0; i < 1000; ++i) {
        const double g = snr(rng), r0 = rate(rng);
        const auto plan = wsi::harq_spoof_plan(g, r0, 64);
        if (plan.feasible) {
            if (std::log2(1.0 + plan.k_star * g) < r0) {
                return false;
            }
            if (plan.k_star > 1 && std::log2(1.0 + (plan.k_star - 1) * g) >= r0) {
                return false;
            }
        } else if (std::log2(1.0 + 64.0 * g) >= r0) {
            return false;
        }
    }
    return true;
}

bool prop_assignment() {
    wsi::Scenario sc;
    sc.nodes = {
        wsi::Node{"a1", {0.0, 0.0}, wsi::Role::SuspiciousTx, 43.0, -80.0},
        wsi::Node{"b1", {0.0, 500.0}, wsi::Role::SuspiciousRx,
                  -std::numeric_limits<double>::infinity(), -80.0},
        wsi::Node{"a2", {2000.0, 0.0}, wsi::Role::SuspiciousTx, 43.0, -80.0},
        wsi::Node{"b2", {2000.0, 500.0}, wsi::Role::SuspiciousRx,
                  -std::numeric_limits<double>::infinity(), -80.0},
        wsi::Node{"sidA", {0.0, 650.0}, wsi::Role::Sid, 43.0, -80.0},
        wsi::Node{"sidB", {2000.0, 250.0}, wsi::Role::Sid, 43.0, -80.0},
    };
    sc.links = {{"l1", "a1", "b1", "band1"}, {"l2", "a2", "b2", "band1"}};
    sc.sids = {"sidA", "sidB"};
    sc.bands = {"band1"};

    for (auto objective : {wsi::AssignmentObjective::MaxTotalEavRate,
                           wsi::AssignmentObjective::MinTotalMaliciousRate}) {
        const auto ex = wsi::optimize_assignment(sc, objective, sc.channel,
                                                 wsi::SearchStrategy::Exhaustive);
        const auto gr = wsi::optimize_assignment(sc, objective, sc.channel,
                                                 wsi::SearchStrategy::Greedy);
        if (ex.objective_value < gr.objective_value - 1e-12) {
            return false;
        }
        const auto recheck = wsi::evaluate_plan(sc, sc.channel, objective, ex.decisions);
        if (!recheck.feasible) {
            return false;
        }
        for (double s : recheck.slacks) {
            if (s < 0.0) {
                return false;
            }
        }
    }
    return true;
}

bool prop_betweenness() {
    const std::pair<std::string, std::string> links[] = {
        {"1", "3"}, {"3", "5"}, {"4", "3"}, {"3", "2"}};
    return wsi::criticality_rank(links).front() == "3";
}

void criterion_8_properties(const Axis& ax) {
    const bool a = prop_eavesdropping_rate();
    const bool b = prop_symbol_dominates_direct(ax);
    const bool c = prop_monotone_jam(ax);
    const bool d = prop_pilot_conservation();
    const bool e = prop_harq_minimality();
    const bool f = prop_assignment();
    const bool g = prop_betweenness();
    std::string detail;
    detail += std::string("rate-def=") + (a ? "ok" : "FAIL");
    detail += std::string(" spoof-dominance=") + (b ? "ok" : "FAIL");
    detail += std::string(" jam-monotone=") + (c ? "ok" : "FAIL");
    detail += std::string(" pilot-conservation=") + (d ? "ok" : "FAIL");
    detail += std::string(" harq-minimality=") + (e ? "ok" : "FAIL");
    detail += std::string(" assignment=") + (f ? "ok" : "FAIL");
    detail += std::string(" betweenness=") + (g ? "ok" : "FAIL");
    report(8, "property suites", a && b && c && d && e && f && g, detail);
}

void criterion_9_determinism() {
    const std::string fig4_once = wsi::run_preset("fig4").to_csv();
    const std::string fig4_again = wsi::run_preset("fig4").to_csv();
    const std::string fig4_mt = wsi::run_preset("fig4", 4).to_csv();
    const std::string fig6_once = wsi::run_preset("fig6").to_csv();
    const std::string fig6_mt = wsi::run_preset("fig6", 3).to_csv();
    const bool pass = fig4_once == fig4_again && fig4_once == fig4_mt &&
                      fig6_once == wsi::run_preset("fig6").to_csv() && fig6_once == fig6_mt;
    report(9, "byte-identical preset output across runs and thread counts", pass,
           pass ? "fig4/fig6 stable" : "byte mismatch");
}

}  // namespace

int main() {
    const Axis ax;
    const wsi::ResultTable fig4 = wsi::run_preset("fig4");
    const wsi::ResultTable fig6 = wsi::run_preset("fig6");

    criterion_1_baseline(ax);
    criterion_2_passive(ax, fig4);
    criterion_3_proactive_origin(fig4);
    criterion_4_relay_peak(fig4);
    criterion_5_jamming_boundary(fig4);
    criterion_6_spoofing(fig6);
    criterion_7_oracles(ax);
    criterion_8_properties(ax);
    criterion_9_determinism();

    std::printf("%d of 9 criteria failed\n", failures);
    return failures;
}
