#include <string>

#include "doctest.h"
#include "wsi/experiments.hpp"
#include "wsi/scenario_io.hpp"

using namespace wsi;

namespace {

std::string diagnostic(const std::string& text) {
    try {
        parse_scenario(text, "test");
        return "";
    } catch (const ScenarioError& e) {
        return e.what();
    }
}

}  // namespace

TEST_SUITE("scenario-io") {

TEST_CASE("the bundled fig4 preset parses to the reference setup") {
    const ScenarioDoc doc = parse_scenario(preset_scenario_text("fig4"), "fig4");
    const Node& alice = doc.scenario.node_by_id("alice");
    CHECK(alice.role == Role::SuspiciousTx);
    CHECK(alice.position.x == 0.0);
    CHECK(alice.position.y == 0.0);
    CHECK(alice.tx_power_dbm == 43.0);
    const Node& bob = doc.scenario.node_by_id("bob");
    CHECK(bob.position.y == 500.0);
    CHECK(bob.noise_power_dbm == -80.0);
    CHECK(doc.scenario.channel.pathloss_exponent == 3.0);
    CHECK(doc.scenario.channel.reference_loss_db == -60.0);
    CHECK(doc.scenario.links.size() == 1);
    CHECK(doc.scenario.sids.size() == 1);
    CHECK(doc.scenario.bands == std::vector<std::string>{"b1"});
    REQUIRE(doc.sweep.present);
    CHECK(doc.sweep.experiment == SweepExperiment::Eavesdropping);
    CHECK(doc.sweep.from == 0.0);
    CHECK(doc.sweep.to == 1500.0);
    CHECK(doc.sweep.step == 10.0);
    CHECK(doc.seed == 1);
}

TEST_CASE("diagnostics name the offender") {
    const std::string base =
        "node id=a role=suspicious-tx x=0 y=0 tx_dbm=43\n"
        "node id=b role=suspicious-rx x=0 y=500\n";

    SUBCASE("unknown key") {
        const std::string msg = diagnostic(base + "link tx=a rx=b band=b1 color=red\n");
        CHECK(msg.find("color") != std::string::npos);
        CHECK(msg.find("test:3") != std::string::npos);
    }
    SUBCASE("unknown record type") {
        CHECK(diagnostic("frequency hop=1\n").find("frequency") != std::string::npos);
    }
    SUBCASE("dangling node reference") {
        CHECK(diagnostic(base + "link tx=a rx=ghost band=b1\n").find("ghost") !=
              std::string::npos);
    }
    SUBCASE("bad number") {
        const std::string msg = diagnostic("node id=a role=sid x=zero y=0\n");
        CHECK(msg.find("zero") != std::string::npos);
        CHECK(msg.find("x") != std::string::npos);
    }
    SUBCASE("missing required key") {
        CHECK(diagnostic("node id=a role=suspicious-tx x=0 y=0\n").find("tx_dbm") !=
              std::string::npos);
    }
    SUBCASE("negative interference cap") {
        const std::string msg =
            diagnostic(base + "legit node=b band=b1 max_interference_w=-2\n");
        CHECK(msg.find("negative") != std::string::npos);
    }
    SUBCASE("duplicate channel record") {
        CHECK(diagnostic("channel exponent=3\nchannel exponent=2\n").find("duplicate") !=
              std::string::npos);
    }
    SUBCASE("zero sweep step") {
        const std::string msg = diagnostic(
            base + "sid id=a\nsweep experiment=spoofing node=a coord=x from=0 to=1 step=0\n");
        CHECK(msg.find("step") != std::string::npos);
    }
    SUBCASE("unreadable file") {
        CHECK_THROWS_AS(load_scenario("/nonexistent/path.scn"), ScenarioError);
    }
}

TEST_CASE("comments, blank lines and defaults") {
    const ScenarioDoc doc = parse_scenario(
        "# header comment\n"
        "\n"
        "node id=a role=suspicious-tx x=1.5 y=-2 tx_dbm=30  # trailing comment\n"
        "node id=s role=sid x=0 y=0 tx_dbm=20 noise_dbm=-90\n",
        "test");
    CHECK(doc.scenario.nodes.size() == 2);
    CHECK(doc.scenario.node_by_id("a").noise_power_dbm == -80.0);  // default
    CHECK(doc.scenario.node_by_id("s").noise_power_dbm == -90.0);
    CHECK(doc.scenario.channel.min_distance_m == 1.0);  // default clamp
    CHECK(!doc.sweep.present);
    CHECK(doc.seed == 0);
}

TEST_CASE("link ids default to tx->rx") {
    const ScenarioDoc doc = parse_scenario(
        "node id=a role=suspicious-tx x=0 y=0 tx_dbm=43\n"
        "node id=b role=suspicious-rx x=0 y=500\n"
        "link tx=a rx=b band=b9\n",
        "test");
    CHECK(doc.scenario.links[0].id == "a->b");
    CHECK(doc.scenario.bands == std::vector<std::string>{"b9"});
}

}  // TEST_SUITE
