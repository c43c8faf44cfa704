#include "relayarq/rng.hpp"

namespace relayarq {
namespace {

constexpr std::uint64_t kIncrement = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix64(seed + kIncrement * (stream_id + 1)) ^ mix64(~stream_id)) {}

std::uint64_t TrialRng::next_u64() {
    state_ += kIncrement;
    return mix64(state_);
}

double TrialRng::next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next_unit() < p;
}

} // namespace relayarq
