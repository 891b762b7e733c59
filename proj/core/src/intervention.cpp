#include "wsi/intervention.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace wsi {

namespace {

struct SpoofContext {
    double snr_ab = 0.0;
    double snr_as = 0.0;
    double gain_sb = 0.0;
    double noise_rx_w = 0.0;
    double budget_w = 0.0;
    double budget_snr = 0.0;  // budget * gain_sb / noise
};

SpoofContext make_spoof_context(const Node& tx, const Node& rx, const Node& sid,
                                const ChannelModel& model) {
    SpoofContext ctx;
    ctx.snr_ab = link_snr(tx, rx, model).snr;
    ctx.snr_as = link_snr(tx, sid, model).snr;
    ctx.gain_sb = pathloss_gain(model, distance_m(sid.position, rx.position));
    ctx.noise_rx_w = dbm_to_watts(rx.noise_power_dbm);
    ctx.budget_w = dbm_to_watts(sid.tx_power_dbm);
    ctx.budget_snr = ctx.budget_w * ctx.gain_sb / ctx.noise_rx_w;
    return ctx;
}

/// Spoofing SINR as a function of the cancellation share c (in SNR units):
/// fake power (G - c) over the residual direct-link power plus noise. The
/// regenerated cancellation waveform is clean, so it adds no noise.
double spoof_sinr_at(double budget_snr, double direct_amp, double c) {
    const double resid = direct_amp - std::sqrt(c);
    return (budget_snr - c) / (resid * resid + 1.0);
}

}  // namespace

double clamped_db(double linear) {
    const double db = 10.0 * std::log10(linear);
    if (!(db > -300.0)) {
        return -300.0;
    }
    return std::min(db, 300.0);
}

DisruptionOutcome disrupt(const Node& tx, const Node& rx, const Node& sid,
                          const ChannelModel& model, DisruptStrategy strategy,
                          double qos_bpshz) {
    if (qos_bpshz < 0.0) {
        throw std::invalid_argument("disrupt: qos must be >= 0");
    }
    const SpoofContext ctx = make_spoof_context(tx, rx, sid, model);

    ControlProblem p;
    p.base_signal_snr = ctx.snr_ab;
    p.base_denominator = 1.0;
    p.signal_fraction = ctx.snr_as / (1.0 + ctx.snr_as);
    p.budget_snr = ctx.budget_snr;
    p.decode_snr = ctx.snr_as;

    SidControl control;
    control.sign = CombineSign::Destructive;
    if (strategy == DisruptStrategy::NoiseOnly) {
        control.noise_power_w = ctx.budget_w;
    } else {
        const ControlSolution sol = minimize_link_snr(p, p.budget_snr);
        const double w_per_snr = ctx.noise_rx_w / ctx.gain_sb;
        control.forward_power_w = sol.forward_snr * w_per_snr;
        control.noise_power_w = sol.noise_snr * w_per_snr;
        const double total = control.total_power_w();
        if (total > ctx.budget_w && total > 0.0) {
            const double scale = ctx.budget_w / total;
            control.forward_power_w *= scale;
            control.noise_power_w *= scale;
        }
    }

    DisruptionOutcome out;
    out.control = control;
    out.r0_before = capacity(ctx.snr_ab);
    const double snr_after = bob_snr_under_control(ctx.snr_ab, ctx.snr_as, ctx.gain_sb,
                                                   control, ctx.noise_rx_w);
    out.r0_after = capacity(snr_after);
    out.disabled = out.r0_after < qos_bpshz;

    const double rho = p.signal_fraction;
    const double t = control.forward_power_w * ctx.gain_sb / ctx.noise_rx_w;
    const double u = control.noise_power_w * ctx.gain_sb / ctx.noise_rx_w;
    out.noise_rise_db = 10.0 * std::log10(1.0 + t * (1.0 - rho) + u);
    const double amp = std::sqrt(ctx.snr_ab) - std::sqrt(rho * t);
    if (ctx.snr_ab > 0.0 && t > 0.0) {
        out.signal_drop_db = 10.0 * std::log10(ctx.snr_ab / (amp * amp));
    }
    return out;
}

double direct_spoof_sinr(const Node& tx, const Node& rx, const Node& sid,
                         const ChannelModel& model) {
    const SpoofContext ctx = make_spoof_context(tx, rx, sid, model);
    const std::array<double, 1> interference = {ctx.snr_ab * ctx.noise_rx_w};
    return sinr(ctx.budget_w * ctx.gain_sb, interference, ctx.noise_rx_w);
}

SpoofingOutcome symbol_level_spoof_sinr(const Node& tx, const Node& rx, const Node& sid,
                                        const ChannelModel& model) {
    const SpoofContext ctx = make_spoof_context(tx, rx, sid, model);
    const double G = ctx.budget_snr;
    const double a = std::sqrt(ctx.snr_ab);

    SpoofingOutcome out;
    out.sinr_direct = spoof_sinr_at(G, a, 0.0);
    out.decodable_at_sid = capacity(ctx.snr_as) >= capacity(ctx.snr_ab);

    if (G <= 0.0) {
        return out;
    }

    // coarse grid over the cancellation share, then golden-section refinement
    constexpr int kGridN = 256;
    double best_c = 0.0;
    double best = out.sinr_direct;
    for (int i = 1; i < kGridN; ++i) {
        const double c = G * i / (kGridN - 1);
        const double v = spoof_sinr_at(G, a, c);
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
    double f1 = spoof_sinr_at(G, a, x1);
    double f2 = spoof_sinr_at(G, a, x2);
    while (hi - lo > 1e-9 * std::max(1.0, G)) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = spoof_sinr_at(G, a, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = spoof_sinr_at(G, a, x2);
        }
    }
    const double c_star = 0.5 * (lo + hi);
    const double v_star = spoof_sinr_at(G, a, c_star);
    if (v_star > best) {
        best = v_star;
        best_c = c_star;
    }
    if (best < out.sinr_direct) {  // c = 0 stays in the candidate set
        best = out.sinr_direct;
        best_c = 0.0;
    }

    out.sinr_symbol_level = best;
    out.cancel_power_w = best_c * ctx.noise_rx_w / ctx.gain_sb;
    out.fake_power_w = std::max(0.0, ctx.budget_w - out.cancel_power_w);
    return out;
}

std::vector<SpoofSweepRow> sweep_spoofing(std::span<const double> x_values_m,
                                          const Node& tx, const Node& rx,
                                          const Node& sid_template,
                                          const ChannelModel& model) {
    const double d = distance_m(tx.position, rx.position);
    const double ux = d > 0.0 ? (rx.position.x - tx.position.x) / d : 1.0;
    const double uy = d > 0.0 ? (rx.position.y - tx.position.y) / d : 0.0;

    std::vector<SpoofSweepRow> rows;
    rows.reserve(x_values_m.size());
    for (double x : x_values_m) {
        Node sid = sid_template;
        sid.position = {tx.position.x + x * ux, tx.position.y + x * uy};
        SpoofSweepRow row;
        row.x_m = x;
        row.direct_db = clamped_db(direct_spoof_sinr(tx, rx, sid, model));
        row.symbol_level_db =
            clamped_db(symbol_level_spoof_sinr(tx, rx, sid, model).sinr_symbol_level);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wsi
