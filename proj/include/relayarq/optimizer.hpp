#pragma once

#include <vector>

#include "relayarq/channel.hpp"
#include "relayarq/types.hpp"

namespace relayarq {

struct KOptimum {
    double k_star = 0.0;
    double eta_star = 0.0;
};

struct RateOptimum {
    double rate_star = 0.0;
    double eta_star = 0.0;
    bool boundary = false;  ///< maximum sat on an edge of the search range
};

struct SearchPoint {
    double rate = 0.0;
    double k = 0.0;
    double goodput = 0.0;
};

struct OptResult {
    Mode mode = Mode::AF;
    double best_rate = 0.0;
    double best_k = 0.0;
    double best_goodput = 0.0;
    int sweeps = 0;
    bool rate_on_boundary = false;
    std::vector<SearchPoint> search_trace;
};

struct RateRange {
    double lo = 0.05;
    double hi = 20.0;
};

/// Goodput over relay location at fixed rate: 199-point uniform scan of
/// k in [1e-3, 1-1e-3] plus golden-section refinement of the bracketing
/// interval to width 1e-6. Ties break toward smaller k.
KOptimum optimize_k(Mode mode, double gamma, double alpha, double rate);

/// Goodput over rate at fixed relay location: 400-point log-spaced scan of
/// the range plus golden-section refinement to width 1e-6. A maximum on the
/// range edge is reported, not an error.
RateOptimum optimize_rate(Mode mode, double gamma, double alpha, double k,
                          RateRange range = {});

/// Joint (k, rate) maximization: a 50x50 coarse grid picks the starting
/// cell (the surface need not be concave), then coordinate ascent alternates
/// optimize_k / optimize_rate until the improvement drops below 1e-9 or 50
/// sweeps have run.
OptResult optimize_joint(Mode mode, double gamma, double alpha, RateRange range = {});

} // namespace relayarq
