#include "relayarq/optimizer.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "relayarq/analytic.hpp"

namespace relayarq {
namespace {

constexpr double kEdge = 1e-3;      // relay locations searched in [kEdge, 1-kEdge]
constexpr int kKGridPoints = 199;   // odd count so 0.5 is on the grid
constexpr int kRateGridPoints = 400;
constexpr double kRefineTol = 1e-6;

double objective(Mode mode, double gamma, double alpha, double k, double rate) {
    ChannelParams p{gamma, alpha, k};
    return mode == Mode::AF ? goodput_af(p, rate).goodput
                            : goodput_df(p, rate).goodput;
}

void check_mode(Mode mode) {
    if (mode != Mode::AF && mode != Mode::DF)
        throw std::invalid_argument("optimizer: mode must be AF or DF");
}

// Maximize f on [a, b] down to interval width tol. On ties the left
// subinterval is kept, so flat stretches resolve toward smaller arguments.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    double m = 0.5 * (a + b);
    return {m, f(m)};
}

struct GridBest {
    int index = 0;
    double arg = 0.0;
    double value = 0.0;
};

// Scan, refine around the best cell, and fall back to the grid winner if
// refinement somehow lands lower (the surface is only locally unimodal).
template <typename F, typename GridArg>
std::pair<double, double> scan_and_refine(const F& f, const GridArg& arg_at, int n) {
    GridBest best;
    best.arg = arg_at(0);
    best.value = f(best.arg);
    for (int i = 1; i < n; ++i) {
        double a = arg_at(i);
        double v = f(a);
        if (v > best.value) best = {i, a, v};
    }
    double lo = arg_at(best.index > 0 ? best.index - 1 : 0);
    double hi = arg_at(best.index < n - 1 ? best.index + 1 : n - 1);
    auto [x, fx] = golden_max(f, lo, hi, kRefineTol);
    if (fx >= best.value) return {x, fx};
    return {best.arg, best.value};
}

} // namespace

KOptimum optimize_k(Mode mode, double gamma, double alpha, double rate) {
    check_mode(mode);
    auto f = [&](double k) { return objective(mode, gamma, alpha, k, rate); };
    auto arg = [](int i) {
        return kEdge + (1.0 - 2.0 * kEdge) * i / (kKGridPoints - 1);
    };
    auto [k_star, eta] = scan_and_refine(f, arg, kKGridPoints);
    return {k_star, eta};
}

RateOptimum optimize_rate(Mode mode, double gamma, double alpha, double k,
                          RateRange range) {
    check_mode(mode);
    if (!(range.lo > 0.0) || !(range.hi > range.lo))
        throw std::invalid_argument("optimize_rate: need 0 < lo < hi");
    auto f = [&](double rate) { return objective(mode, gamma, alpha, k, rate); };
    double ratio = range.hi / range.lo;
    auto arg = [&](int i) {
        return range.lo * std::pow(ratio, double(i) / (kRateGridPoints - 1));
    };
    // grid argmax drives the boundary report
    int best_i = 0;
    double best_v = f(arg(0));
    for (int i = 1; i < kRateGridPoints; ++i) {
        double v = f(arg(i));
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    auto [r_star, eta] =
        golden_max(f, arg(best_i > 0 ? best_i - 1 : 0),
                   arg(best_i < kRateGridPoints - 1 ? best_i + 1 : kRateGridPoints - 1),
                   kRefineTol);
    if (eta < best_v) {
        r_star = arg(best_i);
        eta = best_v;
    }
    RateOptimum out;
    out.rate_star = r_star;
    out.eta_star = eta;
    out.boundary = best_i == 0 || best_i == kRateGridPoints - 1;
    return out;
}

OptResult optimize_joint(Mode mode, double gamma, double alpha, RateRange range) {
    check_mode(mode);
    OptResult res;
    res.mode = mode;

    // coarse survey to pick the starting cell
    constexpr int kCoarse = 50;
    double best_k = 0.5, best_r = 1.0, best_eta = -1.0;
    double ratio = range.hi / range.lo;
    for (int i = 0; i < kCoarse; ++i) {
        double k = kEdge + (1.0 - 2.0 * kEdge) * i / (kCoarse - 1);
        for (int j = 0; j < kCoarse; ++j) {
            double r = range.lo * std::pow(ratio, double(j) / (kCoarse - 1));
            double eta = objective(mode, gamma, alpha, k, r);
            res.search_trace.push_back({r, k, eta});
            if (eta > best_eta) {
                best_eta = eta;
                best_k = k;
                best_r = r;
            }
        }
    }
    const double coarse_k = best_k, coarse_r = best_r, coarse_eta = best_eta;

    // coordinate ascent from the best cell
    constexpr int kMaxSweeps = 50;
    constexpr double kImprovementTol = 1e-9;
    bool rate_boundary = false;
    int sweep = 0;
    while (sweep < kMaxSweeps) {
        ++sweep;
        KOptimum ko = optimize_k(mode, gamma, alpha, best_r);
        best_k = ko.k_star;
        RateOptimum ro = optimize_rate(mode, gamma, alpha, best_k, range);
        best_r = ro.rate_star;
        rate_boundary = ro.boundary;
        res.search_trace.push_back({best_r, best_k, ro.eta_star});
        if (ro.eta_star - best_eta < kImprovementTol * std::max(1.0, best_eta)) {
            best_eta = std::max(best_eta, ro.eta_star);
            break;
        }
        best_eta = ro.eta_star;
    }

    res.best_rate = best_r;
    res.best_k = best_k;
    res.best_goodput = objective(mode, gamma, alpha, best_k, best_r);
    if (res.best_goodput < coarse_eta) {
        // ascent lost to the raw survey; keep the survey winner
        res.best_rate = coarse_r;
        res.best_k = coarse_k;
        res.best_goodput = objective(mode, gamma, alpha, coarse_k, coarse_r);
        rate_boundary = false;
    }
    res.sweeps = sweep;
    res.rate_on_boundary = rate_boundary;
    return res;
}

} // namespace relayarq
