#include "relayarq/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "relayarq/special_fn.hpp"

namespace relayarq {

void ChannelParams::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("ChannelParams: gamma must be positive and finite");
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw std::domain_error("ChannelParams: alpha must be >= 1 and finite");
    if (!(k > 0.0) || !(k < 1.0))
        throw std::domain_error("ChannelParams: k must lie in the open interval (0, 1)");
}

double snr_threshold(double rate) {
    // expm1 keeps 2^rate - 1 accurate for small rates
    return std::expm1(rate * M_LN2);
}

namespace {

void check_rate(double rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw std::domain_error("rate must be nonnegative and finite");
}

void check_sigma2(double sigma2) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::domain_error("sigma2 must be positive and finite");
}

} // namespace

double success_single(double gamma, double rate, double sigma2) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be positive and finite");
    check_rate(rate);
    check_sigma2(sigma2);
    return std::exp(-snr_threshold(rate) / (gamma * sigma2));
}

double outage_single(double gamma, double rate, double sigma2) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be positive and finite");
    check_rate(rate);
    check_sigma2(sigma2);
    return -std::expm1(-snr_threshold(rate) / (gamma * sigma2));
}

double af_relay_path_success(const ChannelParams& params, double rate) {
    params.validate();
    check_rate(rate);
    double g = snr_threshold(rate);
    double kk = params.k * (1.0 - params.k);
    // (k(1-k))^alpha multiplied in, rather than dividing by its negative
    // power, so small k(1-k) cannot overflow
    double xi = 4.0 * (g * g + g) * std::pow(kk, params.alpha) / (params.gamma * params.gamma);
    double theta = g *
                   (std::pow(params.k, params.alpha) + std::pow(1.0 - params.k, params.alpha)) /
                   params.gamma;
    double factor = std::isfinite(xi) ? xi_k1_factor(xi) : 0.0;
    return factor * std::exp(-theta);
}

double outage_af_relay_path(const ChannelParams& params, double rate) {
    return 1.0 - af_relay_path_success(params, rate);
}

DfLinkSuccess df_link_successes(const ChannelParams& params, double rate) {
    params.validate();
    check_rate(rate);
    double g = snr_threshold(rate);
    DfLinkSuccess s;
    s.sd = std::exp(-g / params.gamma);
    s.sr = std::exp(-std::pow(params.k, params.alpha) * g / params.gamma);
    s.rd = std::exp(-std::pow(1.0 - params.k, params.alpha) * g / params.gamma);
    return s;
}

OutageSet outage_df_links(const ChannelParams& params, double rate) {
    params.validate();
    check_rate(rate);
    double g = snr_threshold(rate);
    OutageSet out;
    out.eps_sd = -std::expm1(-g / params.gamma);
    out.eps_path2 = -std::expm1(-std::pow(params.k, params.alpha) * g / params.gamma);
    out.eps_rd = -std::expm1(-std::pow(1.0 - params.k, params.alpha) * g / params.gamma);
    return out;
}

double sample_link_gain(TrialRng& rng, double sigma2) {
    check_sigma2(sigma2);
    return -sigma2 * std::log(rng.next_unit());
}

} // namespace relayarq
