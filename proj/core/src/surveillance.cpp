#include "wsi/surveillance.hpp"

#include <algorithm>
#include <cmath>

namespace wsi {

namespace {

constexpr double kRateTieTol = 1e-12;  // rates closer than this count as equal

// Equalizing controls sit on the decodability boundary; nudging the bisection
// result deeper into the feasible side keeps r_eav stable under the
// normalized-to-watts round trip.
constexpr double kBoundaryMargin = 1e-9;

struct ThreeNodeContext {
    double snr_ab = 0.0;
    double snr_as = 0.0;
    double gain_sb = 0.0;
    double noise_rx_w = 0.0;
    double budget_w = 0.0;
    double r0 = 0.0;
    double r1 = 0.0;
};

ThreeNodeContext make_context(const Node& tx, const Node& rx, const Node& sid,
                              const ChannelModel& model) {
    ThreeNodeContext ctx;
    ctx.snr_ab = link_snr(tx, rx, model).snr;
    ctx.snr_as = link_snr(tx, sid, model).snr;
    ctx.gain_sb = pathloss_gain(model, distance_m(sid.position, rx.position));
    ctx.noise_rx_w = dbm_to_watts(rx.noise_power_dbm);
    ctx.budget_w = dbm_to_watts(sid.tx_power_dbm);
    ctx.r0 = capacity(ctx.snr_ab);
    ctx.r1 = capacity(ctx.snr_as);
    return ctx;
}

ControlProblem make_problem(const ThreeNodeContext& ctx) {
    ControlProblem p;
    p.base_signal_snr = ctx.snr_ab;
    p.base_denominator = 1.0;
    p.signal_fraction = ctx.snr_as / (1.0 + ctx.snr_as);
    p.budget_snr = ctx.budget_w * ctx.gain_sb / ctx.noise_rx_w;
    p.decode_snr = ctx.snr_as;
    return p;
}

SurveillanceOutcome make_outcome(const ThreeNodeContext& ctx, SurveillanceMode mode,
                                 const SidControl& control) {
    SurveillanceOutcome out;
    out.mode = mode;
    out.control = control;
    out.r1 = ctx.r1;

    const double snr = bob_snr_under_control(ctx.snr_ab, ctx.snr_as, ctx.gain_sb,
                                             control, ctx.noise_rx_w);
    out.r0 = capacity(snr);
    out.r_eav = eavesdropping_rate(out.r0, out.r1);

    const double rho = ctx.snr_as / (1.0 + ctx.snr_as);
    const double t = control.forward_power_w * ctx.gain_sb / ctx.noise_rx_w;
    const double u = control.noise_power_w * ctx.gain_sb / ctx.noise_rx_w;
    out.noise_rise_db = 10.0 * std::log10(1.0 + t * (1.0 - rho) + u);
    const double sgn = control.sign == CombineSign::Constructive ? 1.0 : -1.0;
    const double amp = std::sqrt(ctx.snr_ab) + sgn * std::sqrt(rho * t);
    if (ctx.snr_ab > 0.0 && t > 0.0) {
        out.signal_drop_db = 10.0 * std::log10(ctx.snr_ab / (amp * amp));
    }
    return out;
}

SidControl to_control(const ThreeNodeContext& ctx, CombineSign sign, double forward_snr,
                      double noise_snr) {
    SidControl c;
    c.sign = sign;
    const double w_per_snr = ctx.noise_rx_w / ctx.gain_sb;
    c.forward_power_w = forward_snr * w_per_snr;
    c.noise_power_w = noise_snr * w_per_snr;
    // keep the budget invariant exact under roundoff
    const double total = c.total_power_w();
    if (total > ctx.budget_w && total > 0.0) {
        const double scale = ctx.budget_w / total;
        c.forward_power_w *= scale;
        c.noise_power_w *= scale;
    }
    return c;
}

/// Golden-section search for the minimum of f on [lo, hi]; f must be unimodal.
template <typename F>
double golden_min(F&& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 160 && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    double best = xm;
    double fbest = f(xm);
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx < fbest) {
            fbest = fx;
            best = x;
        }
    }
    return best;
}

/// Minimal destructive split at a fixed total budget (in SNR units):
/// all power not forwarded goes into artificial noise.
/// Returns the cancellation term s = rho * t at the minimum.
double best_destructive_s(const ControlProblem& p, double total_snr) {
    const double rho = p.signal_fraction;
    const double a = std::sqrt(p.base_signal_snr);
    const double s_hi = rho * total_snr;
    if (s_hi <= 0.0) {
        return 0.0;
    }
    auto h = [&](double s) {
        const double r = a - std::sqrt(s);
        return r * r / (p.base_denominator + total_snr - s);
    };
    return golden_min(h, 0.0, s_hi);
}

double destructive_min_snr(const ControlProblem& p, double total_snr) {
    const double s = best_destructive_s(p, total_snr);
    const double a = std::sqrt(p.base_signal_snr);
    const double r = a - std::sqrt(s);
    return r * r / (p.base_denominator + total_snr - s);
}

}  // namespace

const char* surveillance_mode_name(SurveillanceMode mode) {
    switch (mode) {
        case SurveillanceMode::Passive: return "passive";
        case SurveillanceMode::NoiseJam: return "noise-jam";
        case SurveillanceMode::CombinedJam: return "combined-jam";
        case SurveillanceMode::Relay: return "relay";
        case SurveillanceMode::Auto: return "auto";
    }
    return "?";
}

double eavesdropping_rate(double r0, double r1) {
    return r1 >= r0 ? r0 : 0.0;
}

double control_snr(const ControlProblem& p, CombineSign sign, double forward_snr,
                   double noise_snr) {
    const double rho = p.signal_fraction;
    const double sgn = sign == CombineSign::Constructive ? 1.0 : -1.0;
    const double amp = std::sqrt(p.base_signal_snr) + sgn * std::sqrt(rho * forward_snr);
    const double den = p.base_denominator + (1.0 - rho) * forward_snr + noise_snr;
    return amp * amp / den;
}

double bob_snr_under_control(double snr_tx_rx, double snr_tx_sid, double gain_sid_rx,
                             const SidControl& control, double noise_w) {
    ControlProblem p;
    p.base_signal_snr = snr_tx_rx;
    p.base_denominator = 1.0;
    p.signal_fraction = snr_tx_sid / (1.0 + snr_tx_sid);
    return control_snr(p, control.sign, control.forward_power_w * gain_sid_rx / noise_w,
                       control.noise_power_w * gain_sid_rx / noise_w);
}

ControlSolution minimize_link_snr(const ControlProblem& p, double total_snr) {
    ControlSolution sol;
    sol.sign = CombineSign::Destructive;
    const double rho = p.signal_fraction;
    const double s = best_destructive_s(p, total_snr);
    sol.forward_snr = rho > 0.0 ? s / rho : 0.0;
    sol.noise_snr = std::max(0.0, total_snr - sol.forward_snr);
    sol.link_snr = control_snr(p, sol.sign, sol.forward_snr, sol.noise_snr);
    sol.r_eav = sol.link_snr <= p.decode_snr ? capacity(sol.link_snr) : 0.0;
    return sol;
}

ControlSolution optimize_sid_control(const ControlProblem& p) {
    ControlSolution best;
    best.sign = CombineSign::Constructive;
    best.link_snr = p.base_signal_snr / p.base_denominator;
    best.r_eav = best.link_snr <= p.decode_snr ? capacity(best.link_snr) : 0.0;
    if (p.budget_snr <= 0.0) {
        return best;
    }

    const double passive_snr = best.link_snr;

    // Coarse scan over both signs and the (forward, noise) simplex. The grid
    // candidate is kept only if refinement somehow misses a better region.
    constexpr int kGridN = 65;
    ControlSolution grid_best = best;
    for (CombineSign sign : {CombineSign::Constructive, CombineSign::Destructive}) {
        for (int i = 0; i < kGridN; ++i) {
            const double total = p.budget_snr * i / (kGridN - 1);
            for (int j = 0; j < kGridN; ++j) {
                const double t = total * j / (kGridN - 1);
                const double u = total - t;
                const double snr = control_snr(p, sign, t, u);
                if (snr > p.decode_snr) {
                    continue;
                }
                const double rate = capacity(snr);
                const bool better =
                    rate > grid_best.r_eav + kRateTieTol ||
                    (rate > grid_best.r_eav - kRateTieTol &&
                     t + u < grid_best.forward_snr + grid_best.noise_snr - kRateTieTol);
                if (better) {
                    grid_best = ControlSolution{sign, t, u, snr, rate};
                }
            }
        }
    }

    ControlSolution refined = best;
    if (p.decode_snr >= passive_snr) {
        // Relay regime: push the link rate up toward the decoding cap with
        // constructive forwarding; artificial noise can only hurt here.
        auto neg_snr = [&](double t) {
            return -control_snr(p, CombineSign::Constructive, t, 0.0);
        };
        const double t_peak = golden_min(neg_snr, 0.0, p.budget_snr);
        const double snr_peak = control_snr(p, CombineSign::Constructive, t_peak, 0.0);
        if (snr_peak <= p.decode_snr) {
            refined = ControlSolution{CombineSign::Constructive, t_peak, 0.0, snr_peak,
                                      capacity(snr_peak)};
        } else {
            // lo stays decodable, hi overshoots
            double lo = 0.0, hi = t_peak;
            for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
                const double mid = 0.5 * (lo + hi);
                if (control_snr(p, CombineSign::Constructive, mid, 0.0) <= p.decode_snr) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo *= 1.0 - kBoundaryMargin;
            const double snr_lo = control_snr(p, CombineSign::Constructive, lo, 0.0);
            refined = ControlSolution{CombineSign::Constructive, lo, 0.0, snr_lo,
                                      capacity(snr_lo)};
        }
    } else {
        // Jamming regime: the best decodable rate equals the decoding cap if
        // any control reaches it; find the minimal total power that does.
        if (destructive_min_snr(p, p.budget_snr) <= p.decode_snr) {
            double lo = 0.0, hi = p.budget_snr;  // lo infeasible, hi feasible
            for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
                const double mid = 0.5 * (lo + hi);
                if (destructive_min_snr(p, mid) <= p.decode_snr) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi = std::min(p.budget_snr, hi * (1.0 + kBoundaryMargin));
            refined = minimize_link_snr(p, hi);
        } else {
            refined = ControlSolution{};  // stay silent: nothing is decodable
            refined.link_snr = passive_snr;
            refined.r_eav = 0.0;
        }
    }

    const bool grid_wins =
        grid_best.r_eav > refined.r_eav + kRateTieTol ||
        (grid_best.r_eav > refined.r_eav - kRateTieTol &&
         grid_best.forward_snr + grid_best.noise_snr <
             refined.forward_snr + refined.noise_snr - kRateTieTol);
    return grid_wins ? grid_best : refined;
}

SurveillanceOutcome passive_eavesdrop(const Node& tx, const Node& rx, const Node& sid,
                                      const ChannelModel& model) {
    const ThreeNodeContext ctx = make_context(tx, rx, sid, model);
    return make_outcome(ctx, SurveillanceMode::Passive, SidControl{});
}

SurveillanceOutcome proactive_noise_jam(const Node& tx, const Node& rx, const Node& sid,
                                        const ChannelModel& model) {
    const ThreeNodeContext ctx = make_context(tx, rx, sid, model);
    if (ctx.budget_w <= 0.0) {
        return make_outcome(ctx, SurveillanceMode::Passive, SidControl{});
    }
    const ControlProblem p = make_problem(ctx);

    SidControl control;
    control.sign = CombineSign::Destructive;
    if (ctx.snr_as >= ctx.snr_ab) {
        // already decodable, no jamming needed
        return make_outcome(ctx, SurveillanceMode::NoiseJam, control);
    }
    const double full_jam_snr = control_snr(p, control.sign, 0.0, p.budget_snr);
    if (full_jam_snr > p.decode_snr) {
        control.noise_power_w = ctx.budget_w;  // infeasible: report full power
        return make_outcome(ctx, SurveillanceMode::NoiseJam, control);
    }
    double lo = 0.0, hi = p.budget_snr;  // lo leaves r0 too high, hi is feasible
    for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (control_snr(p, control.sign, 0.0, mid) <= p.decode_snr) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi = std::min(p.budget_snr, hi * (1.0 + kBoundaryMargin));
    control.noise_power_w = std::min(ctx.budget_w, hi * ctx.noise_rx_w / ctx.gain_sb);
    return make_outcome(ctx, SurveillanceMode::NoiseJam, control);
}

SurveillanceOutcome proactive_relay(const Node& tx, const Node& rx, const Node& sid,
                                    const ChannelModel& model) {
    const ThreeNodeContext ctx = make_context(tx, rx, sid, model);
    if (ctx.budget_w <= 0.0) {
        return make_outcome(ctx, SurveillanceMode::Passive, SidControl{});
    }
    const ControlProblem p = make_problem(ctx);

    SidControl control;
    control.sign = CombineSign::Constructive;
    const double full_snr = control_snr(p, control.sign, p.budget_snr, 0.0);
    if (full_snr <= p.decode_snr) {
        control.forward_power_w = ctx.budget_w;
    } else {
        double lo = 0.0, hi = p.budget_snr;  // lo decodable, hi overshoots
        for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
            const double mid = 0.5 * (lo + hi);
            if (control_snr(p, control.sign, mid, 0.0) <= p.decode_snr) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        control.forward_power_w = lo * (1.0 - kBoundaryMargin) * ctx.noise_rx_w / ctx.gain_sb;
    }
    return make_outcome(ctx, SurveillanceMode::Relay, control);
}

SurveillanceOutcome proactive_auto(const Node& tx, const Node& rx, const Node& sid,
                                   const ChannelModel& model) {
    const ThreeNodeContext ctx = make_context(tx, rx, sid, model);
    if (ctx.budget_w <= 0.0) {
        return make_outcome(ctx, SurveillanceMode::Passive, SidControl{});
    }
    const ControlProblem p = make_problem(ctx);
    const ControlSolution sol = optimize_sid_control(p);
    const SidControl control = to_control(ctx, sol.sign, sol.forward_snr, sol.noise_snr);

    SurveillanceMode mode = SurveillanceMode::Passive;
    if (control.total_power_w() > 0.0) {
        if (control.forward_power_w <= 0.0) {
            mode = SurveillanceMode::NoiseJam;
        } else if (control.sign == CombineSign::Constructive &&
                   control.noise_power_w <= 0.0) {
            mode = SurveillanceMode::Relay;
        } else {
            mode = SurveillanceMode::CombinedJam;
        }
    }
    return make_outcome(ctx, mode, control);
}

std::vector<EavSweepRow> sweep_eavesdropping(std::span<const double> x_values_m,
                                             const Node& tx, const Node& rx,
                                             const Node& sid_template,
                                             const ChannelModel& model) {
    const double d = distance_m(tx.position, rx.position);
    const double ux = d > 0.0 ? (rx.position.x - tx.position.x) / d : 1.0;
    const double uy = d > 0.0 ? (rx.position.y - tx.position.y) / d : 0.0;

    std::vector<EavSweepRow> rows;
    rows.reserve(x_values_m.size());
    for (double x : x_values_m) {
        Node sid = sid_template;
        sid.position = {tx.position.x + x * ux, tx.position.y + x * uy};
        EavSweepRow row;
        row.x_m = x;
        row.passive_bpshz = passive_eavesdrop(tx, rx, sid, model).r_eav;
        row.proactive_bpshz = proactive_auto(tx, rx, sid, model).r_eav;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wsi
