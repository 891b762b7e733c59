#pragma once

#include <span>
#include <vector>

#include "wsi/channel.hpp"

namespace wsi {

enum class CombineSign { Constructive, Destructive };

/// How an active listener spends its transmit budget: forward_power_w goes
/// into an amplify-and-forward copy of the overheard signal (phase-aligned
/// per `sign` at the suspicious receiver), noise_power_w into artificial
/// Gaussian noise.
struct SidControl {
    CombineSign sign = CombineSign::Constructive;
    double forward_power_w = 0.0;
    double noise_power_w = 0.0;

    double total_power_w() const { return forward_power_w + noise_power_w; }
};

enum class SurveillanceMode { Passive, NoiseJam, CombinedJam, Relay, Auto };

const char* surveillance_mode_name(SurveillanceMode mode);

struct SurveillanceOutcome {
    double r0 = 0.0;     // suspicious-link rate after the control is applied
    double r1 = 0.0;     // eavesdropping-link rate
    double r_eav = 0.0;  // r0 if r1 >= r0, else 0
    SurveillanceMode mode = SurveillanceMode::Passive;
    SidControl control;
    double noise_rise_db = 0.0;   // rise of the noise floor at the suspicious rx
    double signal_drop_db = 0.0;  // drop of the useful signal power at the rx
};

/// R_Eav: the suspicious data rate the listener decodes without error.
double eavesdropping_rate(double r0, double r1);

/// SNR at the suspicious receiver when the listener applies `control`.
/// The forwarded copy carries a signal fraction rho = snr_tx_sid/(1+snr_tx_sid)
/// (the rest is forwarded receiver noise); its amplitude adds to or subtracts
/// from the direct-link amplitude depending on control.sign. Over-cancellation
/// leaves residual power; there is no clamp.
double bob_snr_under_control(double snr_tx_rx, double snr_tx_sid, double gain_sid_rx,
                             const SidControl& control, double noise_w);

SurveillanceOutcome passive_eavesdrop(const Node& tx, const Node& rx, const Node& sid,
                                      const ChannelModel& model);

/// Minimal artificial-noise jamming that brings the link rate down to the
/// eavesdropping rate. Infeasible at full budget -> r_eav 0 with the
/// full-power control reported.
SurveillanceOutcome proactive_noise_jam(const Node& tx, const Node& rx, const Node& sid,
                                        const ChannelModel& model);

/// Constructive forwarding at full budget, reduced by bisection when the
/// boosted link would outrun the eavesdropping link.
SurveillanceOutcome proactive_relay(const Node& tx, const Node& rx, const Node& sid,
                                    const ChannelModel& model);

/// Best achievable eavesdropping rate over both combining signs and the
/// (forward, noise) power simplex. Among controls achieving the same rate the
/// one with minimal total transmit power is reported.
SurveillanceOutcome proactive_auto(const Node& tx, const Node& rx, const Node& sid,
                                   const ChannelModel& model);

struct EavSweepRow {
    double x_m = 0.0;
    double passive_bpshz = 0.0;
    double proactive_bpshz = 0.0;
};

/// Passive vs proactive eavesdropping rate with the listener placed at
/// distance x from the transmitter along the tx->rx axis.
std::vector<EavSweepRow> sweep_eavesdropping(std::span<const double> x_values_m,
                                             const Node& tx, const Node& rx,
                                             const Node& sid_template,
                                             const ChannelModel& model);

// -- Normalized control optimization --------------------------------------
//
// All quantities are expressed relative to the suspicious receiver's noise
// power. The combined received SNR under a control (t, u) with sign s is
//
//   snr(s, t, u) = (sqrt(base_signal_snr) +/- sqrt(rho * t))^2
//                  / (base_denominator + (1 - rho) * t + u)
//
// where t = forwarded power * gain / noise and u = noise power * gain / noise.
// The three-node case has base_signal_snr = snr(tx->rx) and
// base_denominator = 1; multi-node scenarios fold co-channel interference and
// other forwarders into the two base terms.

struct ControlProblem {
    double base_signal_snr = 0.0;   // coherent signal term before the control
    double base_denominator = 1.0;  // 1 + interference-to-noise at the rx
    double signal_fraction = 0.0;   // rho of the forwarded power
    double budget_snr = 0.0;        // full budget * gain_sid_rx / noise
    double decode_snr = 0.0;        // SNR equivalent of the decoding rate cap
};

struct ControlSolution {
    CombineSign sign = CombineSign::Constructive;
    double forward_snr = 0.0;  // t at the solution
    double noise_snr = 0.0;    // u at the solution
    double link_snr = 0.0;     // snr at the suspicious rx under the control
    double r_eav = 0.0;        // capacity(link_snr) when decodable, else 0
};

/// Combined SNR for a normalized control point.
double control_snr(const ControlProblem& p, CombineSign sign, double forward_snr,
                   double noise_snr);

/// Maximizes the eavesdropping rate over sign x simplex: coarse grid
/// (65x65 per sign) seeded golden-section / bisection refinement.
ControlSolution optimize_sid_control(const ControlProblem& p);

/// Minimizes the link SNR over destructive splits of a total budget
/// total_snr <= p.budget_snr (the disruption primitive).
ControlSolution minimize_link_snr(const ControlProblem& p, double total_snr);

}  // namespace wsi
