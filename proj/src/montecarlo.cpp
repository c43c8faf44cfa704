#include "relayarq/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace relayarq {

void SimConfig::validate() const {
    if (mode != Mode::AF && mode != Mode::DF)
        throw std::invalid_argument("SimConfig: mode must be AF or DF");
    if (trials < 1)
        throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (max_slots_per_codeword < 2)
        throw std::invalid_argument("SimConfig: max_slots_per_codeword must be >= 2");
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("SimConfig: rate must be positive and finite");
    if (source == OutageSource::SampledFading) {
        params.validate();
    } else {
        auto check = [](double e, const char* name) {
            if (!(e >= 0.0) || !(e <= 1.0))
                throw std::invalid_argument(std::string("SimConfig: ") + name +
                                            " must lie in [0, 1]");
        };
        check(eps.eps_sd, "eps_sd");
        check(eps.eps_path2, "eps_path2");
        if (mode == Mode::DF) {
            if (!eps.eps_rd)
                throw std::invalid_argument("SimConfig: DF FixedEps needs eps_rd");
            check(*eps.eps_rd, "eps_rd");
        }
    }
}

namespace {

// Everything a trial needs, derived once per batch.
struct TrialSetup {
    Mode mode;
    bool sampled;
    std::uint64_t max_slots;
    // FixedEps
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;
    // SampledFading
    double gain_threshold = 0.0;  // (2^R - 1) / gamma, on unit-mean gains
    double snr_gate = 0.0;        // 2^R - 1
    double hop_snr_sr = 0.0;      // k^-alpha * gamma
    double hop_snr_rd = 0.0;      // (1-k)^-alpha * gamma
    double sigma2_sr = 1.0;
    double sigma2_rd = 1.0;
};

TrialSetup make_setup(const SimConfig& c) {
    TrialSetup s;
    s.mode = c.mode;
    s.sampled = c.source == OutageSource::SampledFading;
    s.max_slots = c.max_slots_per_codeword;
    if (s.sampled) {
        s.snr_gate = snr_threshold(c.rate);
        s.gain_threshold = s.snr_gate / c.params.gamma;
        s.hop_snr_sr = std::pow(c.params.k, -c.params.alpha) * c.params.gamma;
        s.hop_snr_rd = std::pow(1.0 - c.params.k, -c.params.alpha) * c.params.gamma;
        s.sigma2_sr = std::pow(c.params.k, -c.params.alpha);
        s.sigma2_rd = std::pow(1.0 - c.params.k, -c.params.alpha);
    } else {
        s.e1 = c.eps.eps_sd;
        s.e2 = c.eps.eps_path2;
        s.e3 = c.eps.eps_rd.value_or(0.0);
    }
    return s;
}

// Direct source-destination attempt fails?
inline bool direct_fails(const TrialSetup& s, TrialRng& rng) {
    if (!s.sampled) return rng.bernoulli(s.e1);
    return sample_link_gain(rng, 1.0) < s.gain_threshold;
}

// Amplified relay path fails? Instantaneous path SNR is
// g1*g2 / (g1 + g2 + 1) for the two hop SNRs g1, g2.
inline bool af_path_fails(const TrialSetup& s, TrialRng& rng) {
    if (!s.sampled) return rng.bernoulli(s.e2);
    double g1 = s.hop_snr_sr * sample_link_gain(rng, 1.0);
    double g2 = s.hop_snr_rd * sample_link_gain(rng, 1.0);
    double path_snr = g1 * g2 / (g1 + g2 + 1.0);
    return path_snr < s.snr_gate;
}

inline bool sr_fails(const TrialSetup& s, TrialRng& rng) {
    if (!s.sampled) return rng.bernoulli(s.e2);
    return sample_link_gain(rng, s.sigma2_sr) < s.gain_threshold;
}

inline bool rd_fails(const TrialSetup& s, TrialRng& rng) {
    if (!s.sampled) return rng.bernoulli(s.e3);
    return sample_link_gain(rng, s.sigma2_rd) < s.gain_threshold;
}

// Slot accounting never exceeds max_slots: each transmission is preceded by
// a capacity check, and a trial that cannot afford its next transmission is
// returned truncated with the slots actually spent.
TrialOutcome af_trial(const TrialSetup& s, TrialRng& rng) {
    TrialOutcome out;
    bool first_round = true;
    for (;;) {
        if (out.slots + 1 > s.max_slots) {
            out.truncated = true;
            return out;
        }
        bool direct_failed = direct_fails(s, rng);
        out.slots += 1;
        if (!direct_failed) {
            if (first_round) out.first_state = 0;
            return out;
        }
        if (out.slots + 1 > s.max_slots) {
            out.truncated = true;
            return out;
        }
        bool relay_failed = af_path_fails(s, rng);
        out.slots += 1;
        if (first_round) {
            out.first_state = relay_failed ? 2 : 1;
            first_round = false;
        }
        if (!relay_failed) return out;
        // state 3: source retransmits, a fresh round begins
    }
}

TrialOutcome df_trial(const TrialSetup& s, TrialRng& rng) {
    TrialOutcome out;
    bool first_round = true;
    for (;;) {
        if (out.slots + 1 > s.max_slots) {
            out.truncated = true;
            return out;
        }
        out.slots += 1;  // source broadcast
        if (!direct_fails(s, rng)) {
            if (first_round) out.first_state = 0;
            return out;
        }
        if (sr_fails(s, rng)) {
            // outer ARQ: relay missed it too, source retransmits
            if (first_round) {
                out.first_state = 1;
                first_round = false;
            }
            continue;
        }
        // relay holds the codeword; inner ARQ stays on the R-D link
        bool first_relay_attempt = true;
        for (;;) {
            if (out.slots + 1 > s.max_slots) {
                out.truncated = true;
                return out;
            }
            out.slots += 1;
            bool rd_failed = rd_fails(s, rng);
            if (first_round && first_relay_attempt) {
                out.first_state = rd_failed ? 3 : 2;
                first_round = false;
            }
            first_relay_attempt = false;
            if (!rd_failed) return out;
        }
    }
}

struct ChunkStats {
    unsigned __int128 sum_slots = 0;
    unsigned __int128 sum_sq_slots = 0;
    std::uint64_t truncated = 0;
    std::array<std::uint64_t, 4> first_state{};
};

constexpr std::uint64_t kChunkTrials = 4096;

} // namespace

TrialOutcome run_af_trial(const SimConfig& config, TrialRng& rng) {
    config.validate();
    return af_trial(make_setup(config), rng);
}

TrialOutcome run_df_trial(const SimConfig& config, TrialRng& rng) {
    config.validate();
    return df_trial(make_setup(config), rng);
}

SimReport run_batch(const SimConfig& config) {
    config.validate();
    const TrialSetup setup = make_setup(config);
    const std::uint64_t n = config.trials;
    const std::uint64_t n_chunks = (n + kChunkTrials - 1) / kChunkTrials;

    std::vector<ChunkStats> chunks(n_chunks);
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) return;
            ChunkStats& st = chunks[c];
            std::uint64_t begin = c * kChunkTrials;
            std::uint64_t end = std::min(begin + kChunkTrials, n);
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                TrialRng rng(config.seed, trial);
                TrialOutcome out = setup.mode == Mode::AF ? af_trial(setup, rng)
                                                          : df_trial(setup, rng);
                st.sum_slots += out.slots;
                st.sum_sq_slots +=
                    static_cast<unsigned __int128>(out.slots) * out.slots;
                st.truncated += out.truncated ? 1 : 0;
                st.first_state[static_cast<std::size_t>(out.first_state)] += 1;
            }
        }
    };

    unsigned n_threads = config.threads;
    if (n_threads == 0) {
        n_threads = std::thread::hardware_concurrency();
        if (n_threads == 0) n_threads = 1;
    }
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, n_chunks));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // exact integer reduction in chunk-index order
    unsigned __int128 sum = 0, sum_sq = 0;
    SimReport rep;
    for (const ChunkStats& st : chunks) {
        sum += st.sum_slots;
        sum_sq += st.sum_sq_slots;
        rep.truncated_trials += st.truncated;
        for (int i = 0; i < 4; ++i) rep.first_state_counts[i] += st.first_state[i];
    }
    rep.trials_used = n;
    long double mean = static_cast<long double>(sum) / static_cast<long double>(n);
    rep.mean_slots = static_cast<double>(mean);
    if (n >= 2) {
        long double var =
            (static_cast<long double>(sum_sq) - static_cast<long double>(sum) * mean) /
            static_cast<long double>(n - 1);
        if (var < 0.0L) var = 0.0L;
        rep.std_error = static_cast<double>(std::sqrt(var / static_cast<long double>(n)));
    }
    rep.empirical_goodput = config.rate / rep.mean_slots;
    return rep;
}

} // namespace relayarq
