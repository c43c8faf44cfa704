#pragma once

#include <optional>

#include "relayarq/rng.hpp"

namespace relayarq {

/// Physical-layer operating point. All SNR values are linear; dB conversion
/// belongs to the CLI boundary.
struct ChannelParams {
    double gamma;  ///< transmit SNR, linear, > 0
    double alpha;  ///< path-loss exponent, >= 1
    double k;      ///< normalized relay location, in (0, 1)

    /// Throws std::domain_error if any field is out of range.
    void validate() const;
};

/// Link/path outage probabilities for one operating point. eps_path2 is the
/// source-relay-destination path outage in AF mode and the source-relay link
/// outage in DF mode; eps_rd is present only for DF.
struct OutageSet {
    double eps_sd = 0.0;
    double eps_path2 = 0.0;
    std::optional<double> eps_rd;
};

/// Rayleigh outage probability of a single link:
/// 1 - exp(-(2^rate - 1) / (gamma * sigma2)).
double outage_single(double gamma, double rate, double sigma2);

/// Complement of outage_single, computed without forming 1 - eps.
double success_single(double gamma, double rate, double sigma2);

/// Outage probability of the amplified relay path, whose instantaneous SNR
/// is the harmonic-mean-like combination of the two hop SNRs.
double outage_af_relay_path(const ChannelParams& params, double rate);

/// Complement of outage_af_relay_path: xi_k1_factor(xi) * exp(-theta) with
/// xi = 4*(g^2 + g) * (k(1-k))^alpha / gamma^2, theta = g*(k^a+(1-k)^a)/gamma,
/// g = 2^rate - 1. Kept separate so goodput code can avoid cancellation when
/// outages saturate.
double af_relay_path_success(const ChannelParams& params, double rate);

/// Per-link outage probabilities for DF relaying (S-D, S-R, R-D).
OutageSet outage_df_links(const ChannelParams& params, double rate);

/// Per-link success probabilities for DF relaying.
struct DfLinkSuccess {
    double sd = 0.0;
    double sr = 0.0;
    double rd = 0.0;
};
DfLinkSuccess df_link_successes(const ChannelParams& params, double rate);

/// One draw of a squared Rayleigh channel gain |h|^2 ~ Exponential(mean sigma2).
double sample_link_gain(TrialRng& rng, double sigma2);

/// 2^rate - 1, the capacity-outage SNR threshold for a given rate.
double snr_threshold(double rate);

} // namespace relayarq
