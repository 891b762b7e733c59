#include "wsi/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace wsi {

namespace {

constexpr double kSlackMargin = 1.0 - 1e-12;  // keeps recomputed slacks >= 0

struct Emission {
    const Node* node = nullptr;
    std::string band;
    double power_w = 0.0;
};

/// Total power received at `at` from all emissions on `band`, skipping the
/// node itself and anything in `excluded`.
double received_interference_w(const std::vector<Emission>& emissions,
                               const Node& at, const std::string& band,
                               const ChannelModel& model,
                               const std::set<const Node*>& excluded) {
    double sum = 0.0;
    for (const Emission& e : emissions) {
        if (e.band != band || e.power_w <= 0.0 || e.node == &at ||
            excluded.count(e.node) != 0) {
            continue;
        }
        sum += e.power_w * pathloss_gain(model, distance_m(e.node->position, at.position));
    }
    return sum;
}

/// Best cancellation share for a spoofer with budget G (SNR units) against a
/// link with residual amplitude `amp` and denominator `den`: maximizes
/// (G - c) / (den + (amp - sqrt(c))^2). Unimodal in sqrt(c).
double best_spoof_cancellation(double G, double amp, double den) {
    if (G <= 0.0) {
        return 0.0;
    }
    auto value = [&](double c) {
        const double r = amp - std::sqrt(c);
        return (G - c) / (den + r * r);
    };
    constexpr int kGridN = 128;
    double best_c = 0.0;
    double best = value(0.0);
    for (int i = 1; i < kGridN; ++i) {
        const double c = G * i / (kGridN - 1);
        const double v = value(c);
        if (v > best) {
            best = v;
            best_c = c;
        }
    }
    const double step = G / (kGridN - 1);
    double lo = std::max(0.0, best_c - step);
    double hi = std::min(G, best_c + step);
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    while (hi - lo > 1e-12 * std::max(1.0, G)) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = value(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = value(x2);
        }
    }
    const double mid = 0.5 * (lo + hi);
    return value(mid) > best ? mid : best_c;
}

}  // namespace

const Node* Scenario::find_node(const std::string& id) const {
    for (const Node& n : nodes) {
        if (n.id == id) {
            return &n;
        }
    }
    return nullptr;
}

const Node& Scenario::node_by_id(const std::string& id) const {
    const Node* n = find_node(id);
    if (n == nullptr) {
        throw std::invalid_argument("scenario: unknown node id '" + id + "'");
    }
    return *n;
}

void Scenario::validate() const {
    channel.validate();
    std::set<std::string> ids;
    for (const Node& n : nodes) {
        if (n.id.empty()) {
            throw std::invalid_argument("scenario: node with empty id");
        }
        if (!ids.insert(n.id).second) {
            throw std::invalid_argument("scenario: duplicate node id '" + n.id + "'");
        }
        if (!std::isfinite(n.position.x) || !std::isfinite(n.position.y)) {
            throw std::invalid_argument("scenario: node '" + n.id +
                                        "' has non-finite coordinates");
        }
        if (!std::isfinite(n.noise_power_dbm)) {
            throw std::invalid_argument("scenario: node '" + n.id +
                                        "' has non-finite noise power");
        }
        // -inf is the silent sentinel; +inf and NaN are never valid
        if (std::isnan(n.tx_power_dbm) ||
            n.tx_power_dbm == std::numeric_limits<double>::infinity()) {
            throw std::invalid_argument("scenario: node '" + n.id +
                                        "' has invalid transmit power");
        }
    }
    std::set<std::string> link_ids;
    for (const SuspiciousLink& l : links) {
        node_by_id(l.tx);
        node_by_id(l.rx);
        if (l.tx == l.rx) {
            throw std::invalid_argument("scenario: link '" + l.id +
                                        "' connects a node to itself");
        }
        if (l.band.empty()) {
            throw std::invalid_argument("scenario: link '" + l.id + "' has no band");
        }
        if (!link_ids.insert(l.id).second) {
            throw std::invalid_argument("scenario: duplicate link id '" + l.id + "'");
        }
    }
    std::set<std::string> sid_ids;
    for (const std::string& s : sids) {
        const Node& n = node_by_id(s);
        if (n.role != Role::Sid) {
            throw std::invalid_argument("scenario: node '" + s + "' is not a sid");
        }
        if (!sid_ids.insert(s).second) {
            throw std::invalid_argument("scenario: duplicate sid id '" + s + "'");
        }
    }
    for (const LegitReceiver& r : legit_receivers) {
        node_by_id(r.node);
        if (r.max_interference_w < 0.0) {
            throw std::invalid_argument("scenario: legit receiver '" + r.node +
                                        "' has negative interference cap");
        }
        if (r.band.empty()) {
            throw std::invalid_argument("scenario: legit receiver '" + r.node +
                                        "' has no band");
        }
    }
}

const char* sid_mode_name(SidMode mode) {
    switch (mode) {
        case SidMode::Idle: return "idle";
        case SidMode::Eavesdrop: return "eavesdrop";
        case SidMode::Jam: return "jam";
        case SidMode::Relay: return "relay";
        case SidMode::Spoof: return "spoof";
    }
    return "?";
}

double joint_detection_rate(std::span<const std::string> sid_ids, const std::string& tx_id,
                            const Scenario& scenario, const ChannelModel& model) {
    if (sid_ids.empty()) {
        throw std::invalid_argument("joint_detection_rate: empty sid set");
    }
    const Node& tx = scenario.node_by_id(tx_id);
    double sum_snr = 0.0;
    for (const std::string& id : sid_ids) {
        sum_snr += link_snr(tx, scenario.node_by_id(id), model).snr;
    }
    return capacity(sum_snr);
}

double joint_jamming_power(std::span<const std::string> sid_ids, const std::string& rx_id,
                           const Scenario& scenario, const ChannelModel& model,
                           bool coherent) {
    if (sid_ids.empty()) {
        throw std::invalid_argument("joint_jamming_power: empty sid set");
    }
    const Node& rx = scenario.node_by_id(rx_id);
    double power_sum = 0.0;
    double amp_sum = 0.0;
    for (const std::string& id : sid_ids) {
        const Node& sid = scenario.node_by_id(id);
        const double p = dbm_to_watts(sid.tx_power_dbm) *
                         pathloss_gain(model, distance_m(sid.position, rx.position));
        power_sum += p;
        amp_sum += std::sqrt(p);
    }
    return coherent ? amp_sum * amp_sum : power_sum;
}

std::vector<std::string> criticality_rank(
    std::span<const std::pair<std::string, std::string>> directed_links) {
    if (directed_links.empty()) {
        throw std::invalid_argument("criticality_rank: empty topology");
    }
    std::set<std::string> node_set;
    for (const auto& [from, to] : directed_links) {
        node_set.insert(from);
        node_set.insert(to);
    }
    std::vector<std::string> names(node_set.begin(), node_set.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        index[names[i]] = i;
    }
    const int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [from, to] : directed_links) {
        adj[index[from]].push_back(index[to]);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    // Brandes' accumulation over BFS shortest-path DAGs.
    std::vector<double> betweenness(n, 0.0);
    for (int s = 0; s < n; ++s) {
        std::vector<std::vector<int>> preds(n);
        std::vector<double> sigma(n, 0.0);
        std::vector<int> dist(n, -1);
        std::vector<int> order;
        sigma[s] = 1.0;
        dist[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            order.push_back(v);
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        std::vector<double> delta(n, 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int w = *it;
            for (int v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) {
                betweenness[w] += delta[w];
            }
        }
    }

    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) {
        rank[i] = i;
    }
    std::sort(rank.begin(), rank.end(), [&](int a, int b) {
        if (betweenness[a] != betweenness[b]) {
            return betweenness[a] > betweenness[b];
        }
        return names[a] < names[b];
    });
    std::vector<std::string> result;
    result.reserve(n);
    for (int i : rank) {
        result.push_back(names[i]);
    }
    return result;
}

PlanEvaluation evaluate_plan(const Scenario& scenario, const ChannelModel& model,
                             AssignmentObjective objective,
                             std::span<const SidDecision> decisions) {
    const int n_sids = static_cast<int>(scenario.sids.size());
    if (static_cast<int>(decisions.size()) != n_sids) {
        throw std::invalid_argument("evaluate_plan: one decision per sid required");
    }

    for (const SidDecision& d : decisions) {
        if (d.mode == SidMode::Idle) {
            continue;
        }
        if (d.link_index < 0 || d.link_index >= static_cast<int>(scenario.links.size())) {
            throw std::invalid_argument("evaluate_plan: decision targets an unknown link");
        }
        if (d.band != scenario.links[d.link_index].band) {
            throw std::invalid_argument("evaluate_plan: decision band does not match its link");
        }
    }

    PlanEvaluation eval;
    eval.links.resize(scenario.links.size());
    eval.sid_tx_power_w.assign(n_sids, 0.0);
    eval.slacks.assign(scenario.legit_receivers.size(), 0.0);

    std::vector<const Node*> sid_nodes(n_sids);
    std::vector<double> budgets_w(n_sids);
    for (int i = 0; i < n_sids; ++i) {
        sid_nodes[i] = &scenario.node_by_id(scenario.sids[i]);
        budgets_w[i] = dbm_to_watts(sid_nodes[i]->tx_power_dbm);
    }

    // Emissions with known power: suspicious transmitters plus full-budget
    // Jam/Relay/Spoof listeners. Eavesdrop controllers are appended as their
    // controls get fixed, link by link.
    std::vector<Emission> emissions;
    for (const SuspiciousLink& link : scenario.links) {
        const Node& tx = scenario.node_by_id(link.tx);
        emissions.push_back({&tx, link.band, dbm_to_watts(tx.tx_power_dbm)});
    }
    for (int i = 0; i < n_sids; ++i) {
        const SidDecision& d = decisions[i];
        if (d.mode == SidMode::Jam || d.mode == SidMode::Relay || d.mode == SidMode::Spoof) {
            emissions.push_back({sid_nodes[i], d.band, budgets_w[i]});
            eval.sid_tx_power_w[i] = budgets_w[i];
        }
    }

    // Interference-cap bookkeeping for the fixed emissions.
    std::vector<double> used_w(scenario.legit_receivers.size(), 0.0);
    bool caps_hold = true;
    for (std::size_t j = 0; j < scenario.legit_receivers.size(); ++j) {
        const LegitReceiver& lr = scenario.legit_receivers[j];
        const Node& at = scenario.node_by_id(lr.node);
        for (int i = 0; i < n_sids; ++i) {
            if (eval.sid_tx_power_w[i] <= 0.0 || decisions[i].band != lr.band) {
                continue;
            }
            used_w[j] += eval.sid_tx_power_w[i] *
                         pathloss_gain(model, distance_m(sid_nodes[i]->position, at.position));
        }
        caps_hold = caps_hold && used_w[j] <= lr.max_interference_w;
    }
    if (!caps_hold) {
        eval.feasible = false;
        eval.score = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < eval.slacks.size(); ++k) {
            eval.slacks[k] = scenario.legit_receivers[k].max_interference_w - used_w[k];
        }
        return eval;
    }

    // Per-link folding; the lexicographically first eavesdropper of a link
    // controls its proactive transmission.
    for (std::size_t li = 0; li < scenario.links.size(); ++li) {
        const SuspiciousLink& link = scenario.links[li];
        const Node& tx = scenario.node_by_id(link.tx);
        const Node& rx = scenario.node_by_id(link.rx);
        const double noise_rx_w = dbm_to_watts(rx.noise_power_dbm);

        std::vector<int> eavesdroppers;
        std::vector<int> jammers;
        std::vector<int> relays;
        std::vector<int> spoofers;
        for (int i = 0; i < n_sids; ++i) {
            if (decisions[i].link_index != static_cast<int>(li)) {
                continue;
            }
            switch (decisions[i].mode) {
                case SidMode::Eavesdrop: eavesdroppers.push_back(i); break;
                case SidMode::Jam: jammers.push_back(i); break;
                case SidMode::Relay: relays.push_back(i); break;
                case SidMode::Spoof: spoofers.push_back(i); break;
                case SidMode::Idle: break;
            }
        }
        auto by_id = [&](int a, int b) { return scenario.sids[a] < scenario.sids[b]; };
        std::sort(eavesdroppers.begin(), eavesdroppers.end(), by_id);
        std::sort(relays.begin(), relays.end(), by_id);
        std::sort(spoofers.begin(), spoofers.end(), by_id);

        // Cooperating listeners of this link cancel each other's known
        // waveforms; everything else on the band is interference.
        std::set<const Node*> cooperating;
        for (int i : eavesdroppers) {
            cooperating.insert(sid_nodes[i]);
        }

        // Jam/Relay/Spoof emissions aimed at this link are folded in
        // structurally below instead of as plain interference at its rx.
        std::set<const Node*> aimed_here;
        for (int i : jammers) aimed_here.insert(sid_nodes[i]);
        for (int i : relays) aimed_here.insert(sid_nodes[i]);
        for (int i : spoofers) aimed_here.insert(sid_nodes[i]);

        const double snr_direct = link_snr(tx, rx, model).snr;
        double amp = std::sqrt(snr_direct);
        std::set<const Node*> rx_excluded = aimed_here;
        rx_excluded.insert(&tx);
        double den =
            1.0 + received_interference_w(emissions, rx, link.band, model, rx_excluded) /
                      noise_rx_w;

        for (int i : jammers) {
            const double g = pathloss_gain(model, distance_m(sid_nodes[i]->position, rx.position));
            den += budgets_w[i] * g / noise_rx_w;
        }
        for (int i : relays) {
            const Node& relay = *sid_nodes[i];
            const double noise_rel_w = dbm_to_watts(relay.noise_power_dbm);
            std::set<const Node*> rel_excluded = {&tx, &relay};
            const double intf =
                received_interference_w(emissions, relay, link.band, model, rel_excluded);
            const double sinr_rel =
                dbm_to_watts(tx.tx_power_dbm) *
                pathloss_gain(model, distance_m(tx.position, relay.position)) /
                (noise_rel_w + intf);
            const double rho = sinr_rel / (1.0 + sinr_rel);
            const double t =
                budgets_w[i] *
                pathloss_gain(model, distance_m(relay.position, rx.position)) / noise_rx_w;
            amp += std::sqrt(rho * t);
            den += (1.0 - rho) * t;
        }
        for (int i : spoofers) {
            const double g = pathloss_gain(model, distance_m(sid_nodes[i]->position, rx.position));
            const double G = budgets_w[i] * g / noise_rx_w;
            const double c = best_spoof_cancellation(G, amp, den);
            amp -= std::sqrt(c);
            den += G - c;
        }

        LinkReport& report = eval.links[li];
        if (!eavesdroppers.empty()) {
            double sum_sinr = 0.0;
            for (int i : eavesdroppers) {
                const Node& ear = *sid_nodes[i];
                std::set<const Node*> ear_excluded = cooperating;
                ear_excluded.insert(&tx);
                ear_excluded.insert(&ear);
                const double intf =
                    received_interference_w(emissions, ear, link.band, model, ear_excluded);
                sum_sinr += dbm_to_watts(tx.tx_power_dbm) *
                            pathloss_gain(model, distance_m(tx.position, ear.position)) /
                            (dbm_to_watts(ear.noise_power_dbm) + intf);
            }
            report.r1_joint = capacity(sum_sinr);

            const int ctrl = eavesdroppers.front();
            const Node& ear = *sid_nodes[ctrl];

            // Power left to the controller under the interference caps.
            double budget_ctrl_w = budgets_w[ctrl];
            for (std::size_t j = 0; j < scenario.legit_receivers.size(); ++j) {
                const LegitReceiver& lr = scenario.legit_receivers[j];
                if (lr.band != link.band) {
                    continue;
                }
                const Node& at = scenario.node_by_id(lr.node);
                const double g = pathloss_gain(model, distance_m(ear.position, at.position));
                const double remaining = lr.max_interference_w - used_w[j];
                budget_ctrl_w = std::min(budget_ctrl_w, kSlackMargin * remaining / g);
            }
            budget_ctrl_w = std::max(0.0, budget_ctrl_w);

            std::set<const Node*> ctrl_excluded = cooperating;
            ctrl_excluded.insert(&tx);
            const double intf_ctrl =
                received_interference_w(emissions, ear, link.band, model, ctrl_excluded);
            const double sinr_ctrl =
                dbm_to_watts(tx.tx_power_dbm) *
                pathloss_gain(model, distance_m(tx.position, ear.position)) /
                (dbm_to_watts(ear.noise_power_dbm) + intf_ctrl);
            const double gain_ctrl_rx =
                pathloss_gain(model, distance_m(ear.position, rx.position));

            ControlProblem p;
            p.base_signal_snr = amp * amp;
            p.base_denominator = den;
            p.signal_fraction = sinr_ctrl / (1.0 + sinr_ctrl);
            p.budget_snr = budget_ctrl_w * gain_ctrl_rx / noise_rx_w;
            p.decode_snr = sum_sinr;
            const ControlSolution sol = optimize_sid_control(p);

            report.r0_effective = capacity(sol.link_snr);
            report.r_eav = sol.r_eav;

            const double power_ctrl_w =
                (sol.forward_snr + sol.noise_snr) * noise_rx_w / gain_ctrl_rx;
            eval.sid_tx_power_w[ctrl] = power_ctrl_w;
            if (power_ctrl_w > 0.0) {
                emissions.push_back({&ear, link.band, power_ctrl_w});
                for (std::size_t j = 0; j < scenario.legit_receivers.size(); ++j) {
                    const LegitReceiver& lr = scenario.legit_receivers[j];
                    if (lr.band != link.band) {
                        continue;
                    }
                    const Node& at = scenario.node_by_id(lr.node);
                    used_w[j] += power_ctrl_w *
                                 pathloss_gain(model, distance_m(ear.position, at.position));
                }
            }
        } else {
            report.r0_effective = capacity(amp * amp / den);
            report.r1_joint = 0.0;
            report.r_eav = 0.0;
        }
    }

    for (std::size_t j = 0; j < scenario.legit_receivers.size(); ++j) {
        eval.slacks[j] = scenario.legit_receivers[j].max_interference_w - used_w[j];
    }
    eval.feasible = std::all_of(eval.slacks.begin(), eval.slacks.end(),
                                [](double s) { return s >= 0.0; });

    double score = 0.0;
    for (const LinkReport& r : eval.links) {
        score += objective == AssignmentObjective::MaxTotalEavRate ? r.r_eav
                                                                   : -r.r0_effective;
    }
    eval.score = eval.feasible ? score : -std::numeric_limits<double>::infinity();
    return eval;
}

namespace {

std::vector<SidDecision> candidate_decisions(const Scenario& scenario) {
    std::vector<SidDecision> candidates;
    candidates.push_back(SidDecision{});  // idle first: lexicographically smallest
    for (int li = 0; li < static_cast<int>(scenario.links.size()); ++li) {
        for (SidMode mode : {SidMode::Eavesdrop, SidMode::Jam, SidMode::Relay, SidMode::Spoof}) {
            candidates.push_back(SidDecision{li, mode, scenario.links[li].band});
        }
    }
    return candidates;
}

bool any_active(std::span<const SidDecision> decisions) {
    return std::any_of(decisions.begin(), decisions.end(),
                       [](const SidDecision& d) { return d.mode != SidMode::Idle; });
}

}  // namespace

AssignmentPlan optimize_assignment(const Scenario& scenario, AssignmentObjective objective,
                                   const ChannelModel& model, SearchStrategy strategy) {
    scenario.validate();
    const int n_sids = static_cast<int>(scenario.sids.size());
    const std::vector<SidDecision> candidates = candidate_decisions(scenario);

    std::vector<SidDecision> best(n_sids);
    PlanEvaluation best_eval = evaluate_plan(scenario, model, objective, best);
    bool found_active = false;

    const double tuples = static_cast<double>(scenario.sids.size()) *
                          static_cast<double>(std::max<std::size_t>(1, scenario.links.size())) *
                          static_cast<double>(std::max<std::size_t>(1, scenario.bands.size()));
    const bool exhaustive = strategy == SearchStrategy::Exhaustive ||
                            (strategy == SearchStrategy::Auto && tuples <= 1e5);

    if (exhaustive && n_sids > 0) {
        std::vector<std::size_t> odo(n_sids, 0);
        std::vector<SidDecision> current(n_sids);
        while (true) {
            for (int i = 0; i < n_sids; ++i) {
                current[i] = candidates[odo[i]];
            }
            const PlanEvaluation eval = evaluate_plan(scenario, model, objective, current);
            if (eval.feasible && any_active(current)) {
                found_active = true;
            }
            if (eval.feasible && eval.score > best_eval.score) {
                best = current;
                best_eval = eval;
            }
            int pos = n_sids - 1;
            while (pos >= 0 && ++odo[pos] == candidates.size()) {
                odo[pos] = 0;
                --pos;
            }
            if (pos < 0) {
                break;
            }
        }
    } else if (n_sids > 0) {
        // Greedy: each listener (ascending id) takes the best marginal decision.
        std::vector<int> order(n_sids);
        for (int i = 0; i < n_sids; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return scenario.sids[a] < scenario.sids[b]; });
        std::vector<SidDecision> current(n_sids);
        PlanEvaluation current_eval = evaluate_plan(scenario, model, objective, current);
        for (int i : order) {
            SidDecision chosen = current[i];
            PlanEvaluation chosen_eval = current_eval;
            for (const SidDecision& d : candidates) {
                current[i] = d;
                const PlanEvaluation eval = evaluate_plan(scenario, model, objective, current);
                if (eval.feasible && d.mode != SidMode::Idle) {
                    found_active = true;
                }
                if (eval.feasible && eval.score > chosen_eval.score) {
                    chosen = d;
                    chosen_eval = eval;
                }
            }
            current[i] = chosen;
            current_eval = chosen_eval;
        }
        best = current;
        best_eval = current_eval;
    }

    AssignmentPlan plan;
    plan.decisions = best;
    plan.objective_value = best_eval.score;
    plan.constraint_slacks = best_eval.slacks;
    plan.link_reports = best_eval.links;
    plan.infeasible = !found_active;
    return plan;
}

}  // namespace wsi
