#pragma once

#include <cstdint>
#include <random>

namespace wsi {

/// ACK->NACK spoofing plan against a chase-combining HARQ link: forced
/// retransmissions accumulate SNR linearly at the listener until the packet
/// becomes decodable.
struct HarqPlan {
    bool feasible = false;
    int k_star = 0;         // rounds until the listener decodes (0 if infeasible)
    int spoofed_nacks = 0;  // k_star - 1
    double effective_throughput = 0.0;  // r0 / k_star, 0 if infeasible
    double exposure = 0.0;              // spoofed fraction of the feedback messages
};

/// Smallest round count k <= max_rounds with log2(1 + k * snr_sid) >= r0.
HarqPlan harq_spoof_plan(double snr_sid, double r0_bpshz, int max_rounds);

/// Deterministic unit-mean exponential block-fading generator (Rayleigh
/// power gains). One instance per evaluation; the draw sequence depends only
/// on the seed.
class FadingProcess {
  public:
    explicit FadingProcess(std::uint64_t seed) : rng_(seed) {}

    /// Next unit-mean exponential power gain.
    double next();

  private:
    std::mt19937_64 rng_;  // inverse-CDF mapping, no distribution objects
};

struct SelectiveSpoofResult {
    double throughput_bpshz = 0.0;  // decoded suspicious data per channel round
    double exposure = 0.0;          // spoofed fraction of all feedback rounds
};

/// Stealth variant: spoof ACKs only for packets whose faded direct-link SNR
/// (snr_rx_mean times the block fade) falls below `threshold`. Each packet
/// draws the direct-link fade first, then the eavesdropping-link fade.
/// Packets not worth spoofing (already decodable in one round, or undecodable
/// within max_rounds) take one round.
SelectiveSpoofResult harq_selective_spoof(FadingProcess& fading, int n_packets,
                                          double snr_sid_mean, double snr_rx_mean,
                                          double r0_bpshz, double threshold,
                                          int max_rounds = 8);

struct PilotSpoofGains {
    double r0_gain_factor = 0.0;  // beamforming gain left toward the intended rx
    double r1_gain_factor = 0.0;  // beamforming gain redirected to the listener
};

/// Reverse-link pilot contamination of an M-antenna TDD beamformer. With
/// orthogonal channels the array gain M splits in proportion to the received
/// pilot powers: 1 for the genuine pilot, lambda for the spoofed one.
PilotSpoofGains pilot_spoof(int antennas, double lambda);

}  // namespace wsi
