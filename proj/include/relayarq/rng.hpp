#pragma once

#include <cstdint>

namespace relayarq {

/// Counter-based pseudo-random stream.
///
/// Output n of stream (seed, stream_id) is a bijective 64-bit mix of
/// base(seed, stream_id) + n * odd_increment, so any (seed, stream_id) pair
/// names a reproducible sequence independent of every other pair. Streams
/// are cheap to construct; Monte Carlo code makes one per trial.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform draw on (0, 1], lattice i * 2^-53 for i in [1, 2^53].
    double next_unit();

    /// Bernoulli(p); exact at p <= 0 and p >= 1 (consumes no draw there).
    bool bernoulli(double p);

private:
    std::uint64_t state_;
};

} // namespace relayarq
