#include "relayarq/analytic.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <iostream>
#include <stdexcept>

namespace relayarq {
namespace {

// Aggressive rate sweeps can round an outage probability up to exactly 1.
// Clamp such inputs just inside [0, 1) so downstream denominators stay
// nonzero; anything outside [0, 1] is a caller error.
double sanitize_eps(double eps, const char* name) {
    if (!(eps >= 0.0) || !(eps <= 1.0))
        throw std::domain_error(std::string(name) + " must be a probability in [0, 1)");
    if (eps == 1.0) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::cerr << "relayarq: outage probability saturated at 1, clamped to 1 - 1e-15 "
                         "(further warnings suppressed)\n";
        return 1.0 - 1e-15;
    }
    return eps;
}

void check_rate_positive(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::domain_error("rate must be positive and finite");
}

} // namespace

StateDistribution state_probs_af(double eps1, double eps2) {
    double e1 = sanitize_eps(eps1, "eps1");
    double e2 = sanitize_eps(eps2, "eps2");
    return {Mode::AF, {1.0 - e1, e1 * (1.0 - e2), e1 * e2}};
}

StateDistribution state_probs_df(double eps1, double eps2, double eps3) {
    double e1 = sanitize_eps(eps1, "eps1");
    double e2 = sanitize_eps(eps2, "eps2");
    double e3 = sanitize_eps(eps3, "eps3");
    return {Mode::DF,
            {1.0 - e1, e1 * e2, e1 * (1.0 - e2) * (1.0 - e3), e1 * (1.0 - e2) * e3}};
}

double expected_time_af(double eps1, double eps2) {
    double e1 = sanitize_eps(eps1, "eps1");
    double e2 = sanitize_eps(eps2, "eps2");
    double p1 = 1.0 - e1, p2 = e1 * (1.0 - e2), p3 = e1 * e2;
    return (p1 + 2.0 * p2 + 2.0 * p3) / (1.0 - p3);
}

double expected_time_df(double eps1, double eps2, double eps3) {
    double e1 = sanitize_eps(eps1, "eps1");
    double e2 = sanitize_eps(eps2, "eps2");
    double e3 = sanitize_eps(eps3, "eps3");
    double p1 = 1.0 - e1, p2 = e1 * e2;
    double p3 = e1 * (1.0 - e2) * (1.0 - e3);
    double p4 = e1 * (1.0 - e2) * e3;
    return (p1 + p2 + 2.0 * p3 + (2.0 + 1.0 / (1.0 - e3)) * p4) / (1.0 - p2);
}

double expected_time_df_reduced(double eps1, double eps2, double eps3) {
    double e1 = sanitize_eps(eps1, "eps1");
    double e2 = sanitize_eps(eps2, "eps2");
    double e3 = sanitize_eps(eps3, "eps3");
    double a = 1.0 - e1 * e2;
    return a * (1.0 + e1 - e3 - e1 * e2) / (a * a * (1.0 - e3));
}

GoodputResult goodput_single(double gamma, double rate, double sigma2) {
    check_rate_positive(rate);
    double q = success_single(gamma, rate, sigma2);
    GoodputResult r;
    r.mode = Mode::Single;
    r.rate = rate;
    if (q > 0.0) {
        r.expected_time = 1.0 / q;
    } else {
        // threshold so deep the success probability underflowed
        r.expected_time = 1.0 / (1.0 - sanitize_eps(1.0, "eps"));
    }
    r.goodput = rate / r.expected_time;
    return r;
}

GoodputResult goodput_af(const ChannelParams& params, double rate) {
    check_rate_positive(rate);
    double q1 = success_single(params.gamma, rate, 1.0);
    double s = af_relay_path_success(params, rate);
    // per-round delivery probability 1 - e1*e2, assembled from complements
    // so that deep-outage operating points keep their k-dependence instead
    // of rounding to zero
    double delivered = q1 + (1.0 - q1) * s;
    GoodputResult r;
    r.mode = Mode::AF;
    r.rate = rate;
    r.expected_time = delivered > 0.0 ? (2.0 - q1) / delivered
                                      : std::numeric_limits<double>::infinity();
    if (!std::isfinite(r.expected_time)) {
        // success probabilities underflowed double range entirely; fall back
        // to the clamped-outage route so sweeps stay total
        r.expected_time = expected_time_af(1.0, 1.0);
    }
    r.goodput = rate / r.expected_time;
    return r;
}

GoodputResult goodput_df(const ChannelParams& params, double rate) {
    check_rate_positive(rate);
    DfLinkSuccess q = df_link_successes(params, rate);
    // 1 - e1*e2 and 1 + e1 - e3 - e1*e2 = (1-e3) + e1*(1-e2), in complement form
    double a = q.sd + (1.0 - q.sd) * q.sr;
    double b = q.rd + (1.0 - q.sd) * q.sr;
    GoodputResult r;
    r.mode = Mode::DF;
    r.rate = rate;
    double denom = a * q.rd;
    r.expected_time =
        denom > 0.0 ? b / denom : std::numeric_limits<double>::infinity();
    if (!std::isfinite(r.expected_time)) {
        r.expected_time = expected_time_df(1.0, 1.0, 1.0);
    }
    r.goodput = rate / r.expected_time;
    return r;
}

} // namespace relayarq
