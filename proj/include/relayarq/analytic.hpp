#pragma once

#include <vector>

#include "relayarq/channel.hpp"
#include "relayarq/types.hpp"

namespace relayarq {

/// Probabilities of the mutually exclusive per-round network states:
/// 3 states for AF, 4 for DF. Entries sum to 1.
struct StateDistribution {
    Mode mode = Mode::AF;
    std::vector<double> probs;
};

/// Expected delivery time (in units of the one-codeword slot T) and the
/// resulting goodput for one operating point. goodput == rate / expected_time.
struct GoodputResult {
    Mode mode = Mode::Single;
    double rate = 0.0;
    double expected_time = 1.0;
    double goodput = 0.0;
};

/// AF state probabilities (1-e1, e1*(1-e2), e1*e2).
StateDistribution state_probs_af(double eps1, double eps2);

/// DF state probabilities (1-e1, e1*e2, e1*(1-e2)*(1-e3), e1*(1-e2)*e3).
StateDistribution state_probs_df(double eps1, double eps2, double eps3);

/// Mean slots per delivered codeword under AF ARQ:
/// (p1 + 2*p2 + 2*p3) / (1 - p3).
double expected_time_af(double eps1, double eps2);

/// Mean slots per delivered codeword under DF ARQ, state form:
/// (p1 + p2 + 2*p3 + (2 + 1/(1-e3))*p4) / (1 - p2).
double expected_time_df(double eps1, double eps2, double eps3);

/// Same quantity through the algebraically reduced product form
/// (1-e1*e2)*(1+e1-e3-e1*e2) / ((1-e1*e2)^2 * (1-e3)).
double expected_time_df_reduced(double eps1, double eps2, double eps3);

GoodputResult goodput_single(double gamma, double rate, double sigma2 = 1.0);
GoodputResult goodput_af(const ChannelParams& params, double rate);
GoodputResult goodput_df(const ChannelParams& params, double rate);

} // namespace relayarq
