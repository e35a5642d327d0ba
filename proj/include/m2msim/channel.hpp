// Link budgets: path loss, shadowing, Rayleigh fading, SINR and Shannon
// capacity for M2M and M2B links.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "m2msim/rng.hpp"

namespace m2msim::channel {

enum class InterfaceKind { M2M, M2B };

// Static radio parameters of one interface technology.
struct RfInterfaceSpec {
    std::string name;
    double uplink_center_frequency_mhz = 0.0;
    double total_bandwidth_hz = 0.0;
    double machine_tx_power_w = 0.0;
    double bs_tx_power_w = 0.0;
    double max_device_rate_bps = 0.0;
    double max_range_m = 0.0;
    InterfaceKind kind = InterfaceKind::M2M;

    void validate() const {
        if (total_bandwidth_hz <= 0 || max_device_rate_bps <= 0 || max_range_m <= 0 ||
            machine_tx_power_w <= 0 || bs_tx_power_w <= 0) {
            throw std::invalid_argument("RfInterfaceSpec '" + name +
                                        "': bandwidth, rate, range and powers must be > 0");
        }
    }
};

// Large/small-scale fading model and noise floor.
//
// The noise PSD is a model knob, not a measured constant: the default
// places direct uplinks in a regime where relaying pays off; set
// -174 dBm/Hz for a pure thermal floor.
struct FadingParams {
    double shadowing_mean_db = 0.0;
    double shadowing_std_db = 8.0;
    double rayleigh_scale = 1.0;
    double path_loss_exponent = 4.0;
    double reference_distance_m = 10.0;
    double noise_psd_dbm_hz = -98.0;

    void validate() const {
        if (shadowing_std_db < 0 || rayleigh_scale <= 0 || path_loss_exponent <= 0 ||
            reference_distance_m <= 0) {
            throw std::invalid_argument("FadingParams: invalid value");
        }
    }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Noise power over `bandwidth_hz` given a PSD in dBm/Hz.
inline double noise_power_w(const FadingParams& params, double bandwidth_hz) {
    if (bandwidth_hz <= 0) throw std::domain_error("noise_power_w: bandwidth must be > 0");
    const double dbm = params.noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz);
    return db_to_linear(dbm - 30.0);
}

inline double path_loss_db(double distance_m, const FadingParams& params) {
    if (distance_m <= 0) throw std::domain_error("path_loss_db: distance must be > 0");
    return 10.0 * params.path_loss_exponent *
           std::log10(distance_m / params.reference_distance_m);
}

// One sampled channel realization. Path loss attenuates, shadowing and
// fading are signed dB contributions; gain_db is the composed channel gain.
struct LinkRealization {
    double path_loss_db = 0.0;
    double shadowing_db = 0.0;
    double fading_db = 0.0;
    double gain_db = 0.0;

    double gain_linear() const { return db_to_linear(gain_db); }
};

inline LinkRealization compose_link(double pl_db, double shadowing_db, double fading_db) {
    return LinkRealization{pl_db, shadowing_db, fading_db, -pl_db + shadowing_db + fading_db};
}

inline LinkRealization sample_link(double distance_m, const FadingParams& params,
                                   RandomStream& rng) {
    const double pl = path_loss_db(distance_m, params);
    const double shadow = rng.normal(params.shadowing_mean_db, params.shadowing_std_db);
    const double amplitude = rng.rayleigh(params.rayleigh_scale);
    const double fade = 20.0 * std::log10(amplitude);
    return compose_link(pl, shadow, fade);
}

struct Interferer {
    double tx_power_w;
    double gain_linear;
};

// Relations: received / (noise + sum of interferer powers). M2B links pass
// an empty interferer list.
template <typename InterfererRange>
double sinr(double tx_power_w, double gain_linear, const InterfererRange& interferers,
            double noise_power_w) {
    if (noise_power_w <= 0) throw std::domain_error("sinr: noise power must be > 0");
    if (gain_linear < 0) throw std::domain_error("sinr: gain must be >= 0");
    double denom = noise_power_w;
    for (const auto& it : interferers) {
        if (it.gain_linear < 0) throw std::domain_error("sinr: gain must be >= 0");
        denom += it.tx_power_w * it.gain_linear;
    }
    return tx_power_w * gain_linear / denom;
}

inline double sinr(double tx_power_w, double gain_linear, double interference_w,
                   double noise_power_w) {
    if (noise_power_w <= 0) throw std::domain_error("sinr: noise power must be > 0");
    if (gain_linear < 0 || interference_w < 0) throw std::domain_error("sinr: negative input");
    return tx_power_w * gain_linear / (noise_power_w + interference_w);
}

// Shannon rate capped at the device maximum; zero when the link is out of
// range or the channel is wider than the interface supports.
inline double link_capacity(double bandwidth_hz, double sinr_linear,
                            const RfInterfaceSpec& spec, double distance_m) {
    if (bandwidth_hz <= 0) throw std::domain_error("link_capacity: bandwidth must be > 0");
    if (sinr_linear < 0) throw std::domain_error("link_capacity: sinr must be >= 0");
    if (distance_m > spec.max_range_m || bandwidth_hz > spec.total_bandwidth_hz) return 0.0;
    const double shannon = bandwidth_hz * std::log2(1.0 + sinr_linear);
    return shannon < spec.max_device_rate_bps ? shannon : spec.max_device_rate_bps;
}

// Decode-and-forward: a two-hop path runs at its slower hop.
inline double two_hop_rate(double first_hop_bps, double second_hop_bps) {
    if (first_hop_bps < 0 || second_hop_bps < 0) {
        throw std::domain_error("two_hop_rate: rates must be >= 0");
    }
    return first_hop_bps < second_hop_bps ? first_hop_bps : second_hop_bps;
}

}  // namespace m2msim::channel
