#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wsi/intervention.hpp"

using namespace wsi;

namespace {

const ChannelModel kModel{};

struct AxisSetup {
    Node alice{"alice", {0.0, 0.0}, Role::SuspiciousTx, 43.0, -80.0};
    Node bob{"bob", {0.0, 500.0}, Role::SuspiciousRx,
             -std::numeric_limits<double>::infinity(), -80.0};
    Node sid{"sid1", {0.0, 0.0}, Role::Sid, 43.0, -80.0};

    Node at(double x) const {
        Node s = sid;
        s.position.y = x;
        return s;
    }
};

}  // namespace

TEST_SUITE("intervention") {

TEST_CASE("direct spoofing") {
    const AxisSetup s;

    SUBCASE("x=1000: equal received powers give -0.26 dB") {
        const double v = direct_spoof_sinr(s.alice, s.bob, s.at(1000.0), kModel);
        CHECK(v == doctest::Approx(0.941).epsilon(1e-3));
        CHECK(clamped_db(v) < 0.0);
    }

    SUBCASE("zero budget gives zero") {
        Node broke = s.at(800.0);
        broke.tx_power_dbm = -std::numeric_limits<double>::infinity();
        CHECK(direct_spoof_sinr(s.alice, s.bob, broke, kModel) == 0.0);
    }

    SUBCASE("peaks next to the receiver") {
        const double at_rx = direct_spoof_sinr(s.alice, s.bob, s.at(500.0), kModel);
        for (double x : {0.0, 200.0, 400.0, 600.0, 900.0, 1400.0}) {
            CHECK(direct_spoof_sinr(s.alice, s.bob, s.at(x), kModel) <= at_rx);
        }
    }

    SUBCASE("below 0 dB beyond x=1000") {
        for (double x = 1010.0; x <= 1500.0; x += 10.0) {
            CHECK(clamped_db(direct_spoof_sinr(s.alice, s.bob, s.at(x), kModel)) < 0.0);
        }
    }
}

TEST_CASE("symbol-level spoofing") {
    const AxisSetup s;

    SUBCASE("x=1000: optimum near c=9.7 with ~5.7 dB gain") {
        const auto out = symbol_level_spoof_sinr(s.alice, s.bob, s.at(1000.0), kModel);
        CHECK(out.sinr_symbol_level == doctest::Approx(3.526).epsilon(1e-3));
        const double gain_db =
            clamped_db(out.sinr_symbol_level) - clamped_db(out.sinr_direct);
        CHECK(gain_db == doctest::Approx(5.74).epsilon(1e-2));
        CHECK(!out.decodable_at_sid);  // listener twice as far as the receiver
    }

    SUBCASE("budget split is consistent") {
        const auto out = symbol_level_spoof_sinr(s.alice, s.bob, s.at(700.0), kModel);
        CHECK(out.cancel_power_w >= 0.0);
        CHECK(out.fake_power_w >= 0.0);
        CHECK(out.cancel_power_w + out.fake_power_w ==
              doctest::Approx(dbm_to_watts(43.0)).epsilon(1e-9));
        CHECK(symbol_level_spoof_sinr(s.alice, s.bob, s.at(300.0), kModel).decodable_at_sid);
    }

    SUBCASE("regenerated cancellation adds no noise") {
        // Complete cancellation leaves SINR = (G - a^2)/1. An optimum at or
        // above that bound is only reachable when the cancellation waveform
        // contributes nothing to the noise floor.
        const auto g = oracles::axis_geometry(400.0);
        const auto out = symbol_level_spoof_sinr(s.alice, s.bob, s.at(400.0), kModel);
        CHECK(out.sinr_symbol_level >= g.budget_t - g.snr_ab);
    }

    SUBCASE("0 dB crossing between x=1100 and x=1110") {
        const auto near = symbol_level_spoof_sinr(s.alice, s.bob, s.at(1100.0), kModel);
        const auto far = symbol_level_spoof_sinr(s.alice, s.bob, s.at(1110.0), kModel);
        CHECK(near.sinr_symbol_level > 1.0);
        CHECK(far.sinr_symbol_level < 1.0);
    }

    SUBCASE("never below the direct strategy on a 100-point grid") {
        for (int i = 0; i < 100; ++i) {
            const double x = 1500.0 * i / 99.0;
            const auto out = symbol_level_spoof_sinr(s.alice, s.bob, s.at(x), kModel);
            CHECK(out.sinr_symbol_level >= out.sinr_direct);
            CHECK(out.sinr_direct ==
                  doctest::Approx(direct_spoof_sinr(s.alice, s.bob, s.at(x), kModel))
                      .epsilon(1e-12));
        }
    }

    SUBCASE("matches the 1e5-point brute-force split on 20 geometries") {
        std::mt19937 rng(55);
        std::uniform_real_distribution<double> xs(0.0, 1400.0);
        for (int k = 0; k < 20; ++k) {
            const double x = xs(rng);
            const auto g = oracles::axis_geometry(x);
            const double oracle = oracles::best_spoof_sinr_grid(g.budget_t, g.snr_ab, 100000);
            const auto out = symbol_level_spoof_sinr(s.alice, s.bob, s.at(x), kModel);
            CHECK(out.sinr_symbol_level ==
                  doctest::Approx(oracle).epsilon(1e-6));
            CHECK(out.sinr_symbol_level >= oracle * (1.0 - 1e-9));
        }
    }
}

TEST_CASE("disruption") {
    const AxisSetup s;

    SUBCASE("noise jamming from the receiver's doorstep disables the link") {
        const auto out = disrupt(s.alice, s.bob, s.at(500.0), kModel,
                                 DisruptStrategy::NoiseOnly, 0.5);
        CHECK(out.r0_after < 1e-6);
        CHECK(out.disabled);
        CHECK(out.signal_drop_db == 0.0);  // noise-only never touches the signal
        CHECK(out.noise_rise_db > 90.0);
    }

    SUBCASE("zero budget changes nothing") {
        Node broke = s.at(750.0);
        broke.tx_power_dbm = -std::numeric_limits<double>::infinity();
        for (DisruptStrategy strat : {DisruptStrategy::NoiseOnly, DisruptStrategy::Combined}) {
            const auto out = disrupt(s.alice, s.bob, broke, kModel, strat, 1.0);
            CHECK(out.r0_after == out.r0_before);
            CHECK(out.noise_rise_db == 0.0);
        }
    }

    SUBCASE("combined never loses to noise-only") {
        for (double x : {100.0, 400.0, 600.0, 750.0, 1000.0, 1300.0}) {
            const auto noise =
                disrupt(s.alice, s.bob, s.at(x), kModel, DisruptStrategy::NoiseOnly, 0.0);
            const auto combined =
                disrupt(s.alice, s.bob, s.at(x), kModel, DisruptStrategy::Combined, 0.0);
            CHECK(combined.r0_after <= noise.r0_after + 1e-12);
        }
    }

    SUBCASE("combined matches the dense split oracle") {
        for (double x : {300.0, 750.0, 1100.0}) {
            const auto g = oracles::axis_geometry(x);
            const double oracle = oracles::min_rate_grid(g.snr_ab, g.snr_as, g.budget_t, 200000);
            const auto out =
                disrupt(s.alice, s.bob, s.at(x), kModel, DisruptStrategy::Combined, 0.0);
            CHECK(out.r0_after <= oracle + 1e-9);
            CHECK(out.r0_after == doctest::Approx(oracle).epsilon(1e-6));
        }
    }

    SUBCASE("disabled flag follows the qos threshold") {
        const auto out =
            disrupt(s.alice, s.bob, s.at(750.0), kModel, DisruptStrategy::Combined, 0.0);
        CHECK(!out.disabled);  // qos 0 can never disable
        const auto strict =
            disrupt(s.alice, s.bob, s.at(750.0), kModel, DisruptStrategy::Combined,
                    out.r0_after + 0.1);
        CHECK(strict.disabled);
        CHECK_THROWS_AS(
            disrupt(s.alice, s.bob, s.at(750.0), kModel, DisruptStrategy::Combined, -1.0),
            std::invalid_argument);
    }
}

TEST_CASE("spoofing sweep rows") {
    const AxisSetup s;
    const double xs[] = {500.0};
    const auto rows = sweep_spoofing(xs, s.alice, s.bob, s.sid, kModel);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].x_m == 500.0);
    CHECK(rows[0].direct_db > 80.0);
    CHECK(rows[0].symbol_level_db > rows[0].direct_db);
}

TEST_CASE("db clamping") {
    CHECK(clamped_db(0.0) == -300.0);
    CHECK(clamped_db(1e-40) == -300.0);
    CHECK(clamped_db(1e40) == 300.0);
    CHECK(clamped_db(1.0) == 0.0);
}

}  // TEST_SUITE
