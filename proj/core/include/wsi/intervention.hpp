#pragma once

#include <span>
#include <vector>

#include "wsi/channel.hpp"
#include "wsi/surveillance.hpp"

namespace wsi {

enum class DisruptStrategy { NoiseOnly, Combined };

struct DisruptionOutcome {
    double r0_before = 0.0;
    double r0_after = 0.0;
    bool disabled = false;  // r0_after fell below the QoS threshold
    SidControl control;
    double noise_rise_db = 0.0;
    double signal_drop_db = 0.0;
};

struct SpoofingOutcome {
    double sinr_direct = 0.0;        // all budget on the fake signal
    double sinr_symbol_level = 0.0;  // optimal cancellation / fake split
    double cancel_power_w = 0.0;
    double fake_power_w = 0.0;
    bool decodable_at_sid = false;  // r1 >= r0, needed to regenerate symbols
};

/// Jamming attack on the tx->rx link. NoiseOnly spends the whole budget on
/// Gaussian noise; Combined minimizes the post-control rate over destructive
/// forward/noise splits.
DisruptionOutcome disrupt(const Node& tx, const Node& rx, const Node& sid,
                          const ChannelModel& model, DisruptStrategy strategy,
                          double qos_bpshz);

/// Spoofing SINR when the full budget carries the fake signal; the direct-link
/// signal counts as interference.
double direct_spoof_sinr(const Node& tx, const Node& rx, const Node& sid,
                         const ChannelModel& model);

/// Symbol-level spoofing: the listener decodes the source symbols, spends
/// cancel_power_w on a clean regenerated cancellation waveform and the rest
/// on the fake signal. The split maximizing the spoofing SINR is found by a
/// coarse grid plus golden-section refinement.
SpoofingOutcome symbol_level_spoof_sinr(const Node& tx, const Node& rx, const Node& sid,
                                        const ChannelModel& model);

struct SpoofSweepRow {
    double x_m = 0.0;
    double direct_db = 0.0;
    double symbol_level_db = 0.0;
};

/// Spoofing SINR with the listener placed at distance x from the transmitter
/// along the tx->rx axis. dB values are clamped to [-300, 300].
std::vector<SpoofSweepRow> sweep_spoofing(std::span<const double> x_values_m,
                                          const Node& tx, const Node& rx,
                                          const Node& sid_template,
                                          const ChannelModel& model);

/// Clamp used when rendering linear ratios as dB in result tables.
double clamped_db(double linear);

}  // namespace wsi
