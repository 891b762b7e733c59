#include "wsi/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace wsi {

HarqPlan harq_spoof_plan(double snr_sid, double r0_bpshz, int max_rounds) {
    if (snr_sid < 0.0) {
        throw std::invalid_argument("harq_spoof_plan: snr must be >= 0");
    }
    if (!(r0_bpshz > 0.0)) {
        throw std::invalid_argument("harq_spoof_plan: r0 must be > 0");
    }
    if (max_rounds < 1) {
        throw std::invalid_argument("harq_spoof_plan: max_rounds must be >= 1");
    }

    HarqPlan plan;
    for (int k = 1; k <= max_rounds; ++k) {
        if (std::log2(1.0 + k * snr_sid) >= r0_bpshz) {
            plan.feasible = true;
            plan.k_star = k;
            plan.spoofed_nacks = k - 1;
            plan.effective_throughput = r0_bpshz / k;
            plan.exposure = static_cast<double>(k - 1) / k;
            return plan;
        }
    }
    return plan;
}

double FadingProcess::next() {
    // 53-bit uniform in [0, 1), mapped through the exponential inverse CDF
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return -std::log1p(-u);
}

SelectiveSpoofResult harq_selective_spoof(FadingProcess& fading, int n_packets,
                                          double snr_sid_mean, double snr_rx_mean,
                                          double r0_bpshz, double threshold,
                                          int max_rounds) {
    if (n_packets < 1) {
        throw std::invalid_argument("harq_selective_spoof: n_packets must be >= 1");
    }
    if (threshold < 0.0) {
        throw std::invalid_argument("harq_selective_spoof: threshold must be >= 0");
    }

    long long rounds = 0;
    long long nacks = 0;
    double decoded = 0.0;
    for (int i = 0; i < n_packets; ++i) {
        const double snr_rx = snr_rx_mean * fading.next();
        const double snr_sid = snr_sid_mean * fading.next();

        if (snr_rx < threshold) {
            const HarqPlan plan = harq_spoof_plan(snr_sid, r0_bpshz, max_rounds);
            if (plan.feasible) {
                rounds += plan.k_star;
                nacks += plan.spoofed_nacks;
                decoded += r0_bpshz;
                continue;
            }
            // not worth exposing: undecodable even after max_rounds
            rounds += 1;
            continue;
        }
        rounds += 1;
        if (std::log2(1.0 + snr_sid) >= r0_bpshz) {
            decoded += r0_bpshz;
        }
    }

    SelectiveSpoofResult result;
    result.throughput_bpshz = decoded / static_cast<double>(rounds);
    result.exposure = static_cast<double>(nacks) / static_cast<double>(rounds);
    return result;
}

PilotSpoofGains pilot_spoof(int antennas, double lambda) {
    if (antennas < 1) {
        throw std::invalid_argument("pilot_spoof: antennas must be >= 1");
    }
    if (lambda < 0.0) {
        throw std::invalid_argument("pilot_spoof: lambda must be >= 0");
    }
    PilotSpoofGains gains;
    gains.r0_gain_factor = antennas / (1.0 + lambda);
    gains.r1_gain_factor = antennas * lambda / (1.0 + lambda);
    return gains;
}

}  // namespace wsi
