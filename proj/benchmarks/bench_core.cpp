#include <benchmark/benchmark.h>

#include <limits>

#include "wsi/channel.hpp"
#include "wsi/experiments.hpp"
#include "wsi/intervention.hpp"
#include "wsi/network.hpp"
#include "wsi/surveillance.hpp"

namespace {

const wsi::ChannelModel kModel{};
const wsi::Node kAlice{"alice", {0.0, 0.0}, wsi::Role::SuspiciousTx, 43.0, -80.0};
const wsi::Node kBob{"bob", {0.0, 500.0}, wsi::Role::SuspiciousRx,
                     -std::numeric_limits<double>::infinity(), -80.0};

wsi::Node sid_at(double x) {
    return wsi::Node{"sid1", {0.0, x}, wsi::Role::Sid, 43.0, -80.0};
}

void BM_PathlossGain(benchmark::State& state) {
    double d = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsi::pathloss_gain(kModel, d));
        d = d < 2000.0 ? d + 1.0 : 1.0;
    }
}
BENCHMARK(BM_PathlossGain);

void BM_ProactiveAuto(benchmark::State& state) {
    const wsi::Node sid = sid_at(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsi::proactive_auto(kAlice, kBob, sid, kModel).r_eav);
    }
}
BENCHMARK(BM_ProactiveAuto)->Arg(230)->Arg(600)->Arg(1150);

void BM_SymbolLevelSpoof(benchmark::State& state) {
    const wsi::Node sid = sid_at(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wsi::symbol_level_spoof_sinr(kAlice, kBob, sid, kModel).sinr_symbol_level);
    }
}
BENCHMARK(BM_SymbolLevelSpoof)->Arg(600)->Arg(1000);

void BM_PresetFig4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsi::run_preset("fig4").rows.size());
    }
}
BENCHMARK(BM_PresetFig4)->Unit(benchmark::kMillisecond);

void BM_OptimizeAssignment(benchmark::State& state) {
    wsi::Scenario sc;
    sc.nodes = {kAlice, kBob,
                wsi::Node{"a2", {2000.0, 0.0}, wsi::Role::SuspiciousTx, 43.0, -80.0},
                wsi::Node{"b2", {2000.0, 500.0}, wsi::Role::SuspiciousRx,
                          -std::numeric_limits<double>::infinity(), -80.0},
                wsi::Node{"sidA", {0.0, 650.0}, wsi::Role::Sid, 43.0, -80.0},
                wsi::Node{"sidB", {2000.0, 250.0}, wsi::Role::Sid, 43.0, -80.0}};
    sc.links = {{"l1", "alice", "bob", "band1"}, {"l2", "a2", "b2", "band1"}};
    sc.sids = {"sidA", "sidB"};
    sc.bands = {"band1"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wsi::optimize_assignment(sc, wsi::AssignmentObjective::MaxTotalEavRate, sc.channel)
                .objective_value);
    }
}
BENCHMARK(BM_OptimizeAssignment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
