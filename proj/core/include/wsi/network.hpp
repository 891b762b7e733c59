#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wsi/channel.hpp"
#include "wsi/surveillance.hpp"

namespace wsi {

struct SuspiciousLink {
    std::string id;  // defaults to "tx->rx" when not named
    std::string tx;
    std::string rx;
    std::string band;
};

struct LegitReceiver {
    std::string node;
    std::string band;
    double max_interference_w = 0.0;
};

/// Multi-node scenario: suspicious links, listeners and protected receivers.
struct Scenario {
    ChannelModel channel;
    std::vector<Node> nodes;
    std::vector<SuspiciousLink> links;
    std::vector<std::string> sids;  // node ids with Role::Sid
    std::vector<LegitReceiver> legit_receivers;
    std::vector<std::string> bands;  // union of all referenced band ids

    const Node* find_node(const std::string& id) const;
    const Node& node_by_id(const std::string& id) const;  // throws if missing

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

enum class SidMode { Idle, Eavesdrop, Jam, Relay, Spoof };

const char* sid_mode_name(SidMode mode);

/// One listener's decision: target link (index into Scenario::links, -1 when
/// idle), operating mode and the band it occupies (the target link's band).
struct SidDecision {
    int link_index = -1;
    SidMode mode = SidMode::Idle;
    std::string band;
};

struct LinkReport {
    double r0_effective = 0.0;  // link rate under every applied effect
    double r1_joint = 0.0;      // joint-detection rate of the eavesdroppers
    double r_eav = 0.0;
};

struct PlanEvaluation {
    bool feasible = false;
    double score = 0.0;  // maximized objective (negated total rate for MinTotal...)
    std::vector<double> slacks;  // per legit receiver, watts
    std::vector<LinkReport> links;
    std::vector<double> sid_tx_power_w;  // actual transmit power per listener
};

struct AssignmentPlan {
    std::vector<SidDecision> decisions;  // aligned with Scenario::sids
    double objective_value = 0.0;        // maximized score
    std::vector<double> constraint_slacks;
    std::vector<LinkReport> link_reports;
    bool infeasible = false;  // no feasible plan with any active listener exists
};

enum class AssignmentObjective { MaxTotalEavRate, MinTotalMaliciousRate };

/// Auto picks Exhaustive while |sids|*|links|*|bands| <= 1e5, Greedy beyond.
enum class SearchStrategy { Auto, Exhaustive, Greedy };

/// Ideal joint detection across listeners: the combined eavesdropping SNR is
/// the sum of the individual ones.
double joint_detection_rate(std::span<const std::string> sid_ids, const std::string& tx_id,
                            const Scenario& scenario, const ChannelModel& model);

/// Received jamming power at a node. Incoherent noise adds in power; coherent
/// precoding adds in amplitude.
double joint_jamming_power(std::span<const std::string> sid_ids, const std::string& rx_id,
                           const Scenario& scenario, const ChannelModel& model,
                           bool coherent);

/// Nodes of a directed topology ordered by descending betweenness centrality
/// (unweighted shortest paths); ties broken by ascending node id.
std::vector<std::string> criticality_rank(
    std::span<const std::pair<std::string, std::string>> directed_links);

/// Deterministic evaluation of a full decision vector. Non-idle listeners in
/// Jam/Relay/Spoof modes transmit their whole budget; an Eavesdrop listener's
/// control is re-optimized within the power left under the interference caps.
/// Same-band activity appears in every other receiver's SINR denominator.
PlanEvaluation evaluate_plan(const Scenario& scenario, const ChannelModel& model,
                             AssignmentObjective objective,
                             std::span<const SidDecision> decisions);

/// Exhaustive search when |sids|*|links|*|bands| <= 1e5, greedy (best marginal
/// decision per listener in id order) otherwise. Only plans meeting every
/// interference cap are considered; ties resolve to the lexicographically
/// smallest decision vector.
AssignmentPlan optimize_assignment(const Scenario& scenario, AssignmentObjective objective,
                                   const ChannelModel& model,
                                   SearchStrategy strategy = SearchStrategy::Auto);

}  // namespace wsi
