#pragma once

#include <limits>
#include <span>
#include <string>

namespace wsi {

/// Planar node coordinates in meters.
struct Position {
    double x = 0.0;
    double y = 0.0;
};

double distance_m(const Position& a, const Position& b);

enum class Role { SuspiciousTx, SuspiciousRx, Sid, LegitimateRx };

const char* role_name(Role role);

/// Distance-based pathloss law anchored at a reference distance, with a
/// minimum-distance clamp so colocated nodes keep a finite gain.
struct ChannelModel {
    double pathloss_exponent = 3.0;
    double reference_loss_db = -60.0;
    double reference_distance_m = 10.0;
    double min_distance_m = 1.0;

    /// Throws std::invalid_argument on a non-positive exponent or distance.
    void validate() const;
};

/// A positioned radio terminal. tx_power_dbm defaults to -inf (0 W), the
/// sentinel for roles that never transmit.
struct Node {
    std::string id;
    Position position;
    Role role = Role::Sid;
    double tx_power_dbm = -std::numeric_limits<double>::infinity();
    double noise_power_dbm = -80.0;
};

/// One directed link evaluated under a ChannelModel.
struct LinkBudget {
    double gain = 0.0;        // linear power ratio
    double rx_power_w = 0.0;  // watts at the receiver
    double snr = 0.0;         // rx_power_w / receiver noise power
};

// dB / linear conversions. linear_to_db(0) yields -inf (documented sentinel).
double db_to_linear(double value_db);
double linear_to_db(double value);
double dbm_to_watts(double value_dbm);
double watts_to_dbm(double value_w);

/// Linear channel gain at distance d (meters). d is clamped below at
/// model.min_distance_m. Throws std::invalid_argument for non-finite or
/// negative d.
double pathloss_gain(const ChannelModel& model, double d_m);

/// Link budget of tx -> rx using rx's noise power.
LinkBudget link_snr(const Node& tx, const Node& rx, const ChannelModel& model);

/// Shannon capacity log2(1+snr) in bps/Hz. Throws on negative snr.
double capacity(double snr);

/// signal / (noise + sum of interference). Throws if noise_w <= 0 or any
/// power is negative.
double sinr(double signal_w, std::span<const double> interference_w, double noise_w);

}  // namespace wsi
