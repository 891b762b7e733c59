#include "wsi/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace wsi {

double distance_m(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

const char* role_name(Role role) {
    switch (role) {
        case Role::SuspiciousTx: return "suspicious-tx";
        case Role::SuspiciousRx: return "suspicious-rx";
        case Role::Sid: return "sid";
        case Role::LegitimateRx: return "legitimate-rx";
    }
    return "?";
}

void ChannelModel::validate() const {
    if (!(pathloss_exponent > 0.0)) {
        throw std::invalid_argument("channel: pathloss_exponent must be > 0");
    }
    if (!(reference_distance_m > 0.0)) {
        throw std::invalid_argument("channel: reference_distance_m must be > 0");
    }
    if (!(min_distance_m > 0.0)) {
        throw std::invalid_argument("channel: min_distance_m must be > 0");
    }
    if (!std::isfinite(reference_loss_db)) {
        throw std::invalid_argument("channel: reference_loss_db must be finite");
    }
}

double db_to_linear(double value_db) {
    return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double value) {
    return 10.0 * std::log10(value);
}

double dbm_to_watts(double value_dbm) {
    return std::pow(10.0, value_dbm / 10.0) * 1e-3;
}

double watts_to_dbm(double value_w) {
    return 10.0 * std::log10(value_w * 1e3);
}

double pathloss_gain(const ChannelModel& model, double d_m) {
    if (!std::isfinite(d_m) || d_m < 0.0) {
        throw std::invalid_argument("pathloss_gain: distance must be finite and >= 0");
    }
    const double d = std::max(d_m, model.min_distance_m);
    return db_to_linear(model.reference_loss_db) *
           std::pow(d / model.reference_distance_m, -model.pathloss_exponent);
}

LinkBudget link_snr(const Node& tx, const Node& rx, const ChannelModel& model) {
    LinkBudget budget;
    budget.gain = pathloss_gain(model, distance_m(tx.position, rx.position));
    budget.rx_power_w = dbm_to_watts(tx.tx_power_dbm) * budget.gain;
    budget.snr = budget.rx_power_w / dbm_to_watts(rx.noise_power_dbm);
    return budget;
}

double capacity(double snr) {
    if (!(snr >= 0.0)) {
        throw std::invalid_argument("capacity: snr must be >= 0");
    }
    return std::log2(1.0 + snr);
}

double sinr(double signal_w, std::span<const double> interference_w, double noise_w) {
    if (!(noise_w > 0.0)) {
        throw std::invalid_argument("sinr: noise power must be > 0");
    }
    if (signal_w < 0.0) {
        throw std::invalid_argument("sinr: signal power must be >= 0");
    }
    double denom = noise_w;
    for (double p : interference_w) {
        if (p < 0.0) {
            throw std::invalid_argument("sinr: interference power must be >= 0");
        }
        denom += p;
    }
    return signal_w / denom;
}

}  // namespace wsi
