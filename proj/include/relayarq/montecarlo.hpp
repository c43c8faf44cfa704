#pragma once

#include <array>
#include <cstdint>

#include "relayarq/channel.hpp"
#include "relayarq/rng.hpp"
#include "relayarq/types.hpp"

namespace relayarq {

enum class OutageSource { SampledFading, FixedEps };

/// Configuration of one simulation batch. With SampledFading every per-slot
/// channel gain is drawn fresh (block fading, one block per slot) and outage
/// events come from capacity-threshold comparisons; with FixedEps the link
/// and path outages are Bernoulli draws with the given probabilities, which
/// exercises the ARQ state machines in isolation.
struct SimConfig {
    Mode mode = Mode::AF;  // AF or DF
    OutageSource source = OutageSource::SampledFading;
    ChannelParams params{10.0, 3.12, 0.5};  // SampledFading only
    OutageSet eps;                          // FixedEps only
    double rate = 1.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t max_slots_per_codeword = 10000;
    unsigned threads = 0;  // 0 = hardware concurrency; never affects results

    void validate() const;
};

/// Empirical delivery-time estimate. Truncated trials enter the mean with
/// their capped slot count and are counted, never dropped.
struct SimReport {
    double mean_slots = 0.0;
    double std_error = 0.0;
    double empirical_goodput = 0.0;
    std::uint64_t trials_used = 0;
    std::uint64_t truncated_trials = 0;
    /// Counts of the first-round network state of each trial; AF fills the
    /// first three entries, DF all four.
    std::array<std::uint64_t, 4> first_state_counts{};
};

struct TrialOutcome {
    std::uint64_t slots = 0;
    int first_state = 0;  // 0-based state index of the first round
    bool truncated = false;
};

/// One AF delivery attempt sequence: direct broadcast each round, relay path
/// tried after a direct failure, source retransmits when both fail.
TrialOutcome run_af_trial(const SimConfig& config, TrialRng& rng);

/// One DF delivery attempt sequence: source broadcast per outer round; once
/// the relay has decoded, retransmissions stay on the relay-destination link.
TrialOutcome run_df_trial(const SimConfig& config, TrialRng& rng);

/// Runs config.trials independent trials. Per-trial randomness is keyed by
/// (seed, trial index) and the reduction is exact integer arithmetic in a
/// fixed chunk order, so the report is bit-identical for any thread count.
SimReport run_batch(const SimConfig& config);

} // namespace relayarq
