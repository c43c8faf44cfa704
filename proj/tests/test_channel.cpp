#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "relayarq/channel.hpp"
#include "relayarq/special_fn.hpp"

using namespace relayarq;

namespace {

// Empirical outage frequency of a capacity event, with an RNG path that is
// independent of TrialRng.
template <typename Event>
double empirical_outage(long trials, std::uint64_t seed, Event in_outage) {
    std::mt19937_64 gen(seed);
    long bad = 0;
    for (long i = 0; i < trials; ++i)
        if (in_outage(gen)) ++bad;
    return double(bad) / double(trials);
}

double binom_se(double p, long n) { return std::sqrt(p * (1.0 - p) / double(n)); }

} // namespace

TEST_CASE("ChannelParams validation") {
    CHECK_NOTHROW((ChannelParams{10.0, 3.12, 0.5}).validate());
    CHECK_THROWS_AS((ChannelParams{0.0, 3.12, 0.5}).validate(), std::domain_error);
    CHECK_THROWS_AS((ChannelParams{10.0, 0.5, 0.5}).validate(), std::domain_error);
    CHECK_THROWS_AS((ChannelParams{10.0, 3.12, 0.0}).validate(), std::domain_error);
    CHECK_THROWS_AS((ChannelParams{10.0, 3.12, 1.0}).validate(), std::domain_error);
}

TEST_CASE("outage_single closed form and limits") {
    CHECK(outage_single(10.0, 0.0, 1.0) == 0.0);
    CHECK(outage_single(10.0, 1.0, 1.0) ==
          doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-14));
    CHECK(outage_single(1e12, 4.0, 1.0) < 1e-10);
    CHECK(outage_single(10.0, 2.0, 1.0) + success_single(10.0, 2.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(outage_single(-1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(outage_single(10.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(outage_single(10.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("outage_single matches a capacity-event Monte Carlo") {
    const long n = 10000000;
    double gamma = 10.0, rate = 1.0;
    double analytic = outage_single(gamma, rate, 1.0);
    double freq = empirical_outage(n, 2024, [&](std::mt19937_64& gen) {
        std::exponential_distribution<double> gain(1.0);
        return std::log2(1.0 + gain(gen) * gamma) < rate;
    });
    CHECK(std::abs(freq - analytic) <= 3.0 * binom_se(analytic, n));
}

TEST_CASE("outage_af_relay_path basics") {
    ChannelParams p{10.0, 3.12, 0.5};
    CHECK(outage_af_relay_path(p, 0.0) == 0.0);
    double e = outage_af_relay_path(p, 2.0);
    CHECK(e > 0.0);
    CHECK(e < 1.0);
    // placing the relay mid-way beats an off-center relay
    ChannelParams off{10.0, 3.12, 0.3};
    CHECK(e < outage_af_relay_path(off, 2.0));
}

TEST_CASE("outage_af_relay_path composes exactly from the special-function factor") {
    ChannelParams p{10.0, 3.12, 0.37};
    for (double rate : {0.5, 2.0, 4.0, 8.0}) {
        double g = snr_threshold(rate);
        double xi = 4.0 * (g * g + g) * std::pow(p.k * (1.0 - p.k), p.alpha) /
                    (p.gamma * p.gamma);
        double theta =
            g * (std::pow(p.k, p.alpha) + std::pow(1.0 - p.k, p.alpha)) / p.gamma;
        double expected = 1.0 - xi_k1_factor(xi) * std::exp(-theta);
        CHECK(outage_af_relay_path(p, rate) == expected);
    }
}

TEST_CASE("outage_af_relay_path is symmetric in k <-> 1-k") {
    for (double k : {0.125, 0.25, 0.3125, 0.40625}) {
        ChannelParams a{10.0, 3.12, k};
        ChannelParams b{10.0, 3.12, 1.0 - k};
        CHECK(outage_af_relay_path(a, 3.0) == outage_af_relay_path(b, 3.0));
    }
}

TEST_CASE("outage_af_relay_path matches the harmonic-mean SNR Monte Carlo") {
    const long n = 10000000;
    ChannelParams p{10.0, 3.12, 0.5};
    double rate = 2.0;
    double analytic = outage_af_relay_path(p, rate);
    double ga = std::pow(p.k, -p.alpha) * p.gamma;
    double gb = std::pow(1.0 - p.k, -p.alpha) * p.gamma;
    double gate = snr_threshold(rate);
    double freq = empirical_outage(n, 77, [&](std::mt19937_64& gen) {
        std::exponential_distribution<double> unit(1.0);
        double s1 = ga * unit(gen);
        double s2 = gb * unit(gen);
        return s1 * s2 / (s1 + s2 + 1.0) < gate;
    });
    CHECK(std::abs(freq - analytic) <= 3.0 * binom_se(analytic, n));
}

TEST_CASE("outage_df_links closed forms and limits") {
    ChannelParams p{10.0, 3.12, 0.5};
    OutageSet z = outage_df_links(p, 0.0);
    CHECK(z.eps_sd == 0.0);
    CHECK(z.eps_path2 == 0.0);
    CHECK(*z.eps_rd == 0.0);

    ChannelParams near{10.0, 3.12, 0.01};
    OutageSet o = outage_df_links(near, 4.0);
    CHECK(o.eps_path2 < 1e-5);  // relay nearly co-located with the source
    double g = snr_threshold(4.0);
    CHECK(*o.eps_rd ==
          doctest::Approx(1.0 - std::exp(-std::pow(0.99, 3.12) * g / 10.0)).epsilon(1e-12));
}

TEST_CASE("outage_df_links matches per-link Monte Carlo") {
    const long n = 10000000;
    ChannelParams p{10.0, 3.12, 0.5};
    double rate = 4.0;
    OutageSet o = outage_df_links(p, rate);
    double s2_sr = std::pow(p.k, -p.alpha);
    double s2_rd = std::pow(1.0 - p.k, -p.alpha);

    auto freq_for = [&](double sigma2, std::uint64_t seed) {
        return empirical_outage(n, seed, [&](std::mt19937_64& gen) {
            std::exponential_distribution<double> gain(1.0 / sigma2);
            return std::log2(1.0 + gain(gen) * p.gamma) < rate;
        });
    };
    CHECK(std::abs(freq_for(1.0, 11) - o.eps_sd) <= 3.0 * binom_se(o.eps_sd, n));
    CHECK(std::abs(freq_for(s2_sr, 12) - o.eps_path2) <= 3.0 * binom_se(o.eps_path2, n));
    CHECK(std::abs(freq_for(s2_rd, 13) - *o.eps_rd) <= 3.0 * binom_se(*o.eps_rd, n));
}

TEST_CASE("outage monotonicity in rate and SNR") {
    ChannelParams base{10.0, 3.12, 0.5};
    double prev_af = -1.0, prev_sd = -1.0, prev_sr = -1.0, prev_rd = -1.0;
    for (double rate = 0.25; rate <= 8.0; rate += 0.25) {
        double af = outage_af_relay_path(base, rate);
        OutageSet df = outage_df_links(base, rate);
        CHECK(af > prev_af);
        CHECK(df.eps_sd > prev_sd);
        CHECK(df.eps_path2 > prev_sr);
        CHECK(*df.eps_rd > prev_rd);
        prev_af = af;
        prev_sd = df.eps_sd;
        prev_sr = df.eps_path2;
        prev_rd = *df.eps_rd;
    }
    double prev = 2.0;
    for (double gamma = 1.0; gamma <= 1000.0; gamma *= 2.0) {
        ChannelParams p{gamma, 3.12, 0.5};
        double af = outage_af_relay_path(p, 4.0);
        CHECK(af < prev);
        CHECK(af >= 0.0);
        CHECK(af < 1.0);
        prev = af;
    }
}

TEST_CASE("sample_link_gain statistics and determinism") {
    TrialRng rng(42, 0);
    const long n = 1000000;
    double sum = 0.0;
    long below = 0;
    for (long i = 0; i < n; ++i) {
        double g = sample_link_gain(rng, 1.0);
        sum += g;
        if (g < 0.1) ++below;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.005));
    double p = 1.0 - std::exp(-0.1);
    CHECK(std::abs(double(below) / n - p) <= 3.0 * binom_se(p, n));

    TrialRng a(7, 3), b(7, 3);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_link_gain(a, 2.0) == sample_link_gain(b, 2.0));
}
